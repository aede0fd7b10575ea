import math

import numpy as np
import pytest

from khovlap import (
    LaurentPoly,
    Spectrum,
    betti,
    betti_table,
    dirac,
    homology_table,
    jones_polynomial,
    knot_determinant,
    laplacian,
    mirror_diagram,
    poincare_polynomial,
    spectra_table,
    spectrum,
)
from khovlap.spectral import sym_eigenvalues


class TestSpectrum:
    def test_zero_classification(self):
        s = Spectrum((0.0, 1e-12, 0.5, 2.0), zero_threshold=1e-8)
        assert s.zero_multiplicity == 2
        assert s.least_nonzero == 0.5

    def test_all_zero(self):
        s = Spectrum((0.0, 0.0), zero_threshold=1e-8)
        assert s.least_nonzero is None
        assert s.zero_multiplicity == 2

    def test_matches(self):
        a = Spectrum((0.0, 3.0, 6.0), zero_threshold=1e-8)
        assert a.matches([0.0, 3.0 + 1e-9, 6.0], tol=1e-6)
        assert not a.matches([0.0, 3.0, 6.1], tol=1e-6)
        assert not a.matches([0.0, 3.0], tol=1e-6)


class TestLaplacian:
    def test_parts_are_grams_of_differentials(self, trefoil):
        from khovlap import differential_matrix

        lap = laplacian(trefoil, 1, 3)
        d1 = differential_matrix(trefoil, 1, 3).to_dense()
        d0 = differential_matrix(trefoil, 0, 3).to_dense()
        assert np.array_equal(lap.up, d1.T @ d1)
        assert np.array_equal(lap.down, d0 @ d0.T)
        assert np.array_equal(lap.matrix, lap.up + lap.down)

    def test_assembled_spectrum_matches_direct(self, trefoil, figure_eight):
        for d in (trefoil, figure_eight):
            for (r, q) in betti_table(d) | dict.fromkeys(spectra_table(d)):
                direct = sym_eigenvalues(laplacian(d, r, q).matrix.astype(float))
                assert spectrum(d, r, q).matches(direct, tol=1e-8)

    def test_trefoil_reference_spectra(self, trefoil):
        assert spectrum(trefoil, 0, 3).matches([0.0, 6.0], tol=1e-8)
        assert spectrum(trefoil, 1, 5).matches([3.0, 6.0, 6.0], tol=1e-8)
        assert spectrum(trefoil, 1, 3).matches([3.0, 3.0, 6.0], tol=1e-8)


class TestDirac:
    def test_symmetric_about_zero(self, trefoil):
        eigs = np.sort(np.linalg.eigvalsh(dirac(trefoil, 1, 3).matrix))
        assert np.allclose(eigs, -eigs[::-1], atol=1e-8)

    def test_square_blocks_are_laplacians(self, trefoil):
        dm = dirac(trefoil, 1, 3)
        blocks = dm.square_blocks()
        sq = dm.matrix @ dm.matrix
        offset = 0
        for b in blocks:
            n = b.shape[0]
            assert np.allclose(sq[offset : offset + n, offset : offset + n], b)
            offset += n
        assert offset == dm.matrix.shape[0]

    def test_eigenvalue_squares_cover_laplacians(self, figure_eight):
        dm = dirac(figure_eight, 0, 1)
        eigs = np.sort(np.linalg.eigvalsh(dm.matrix)) ** 2
        lap_eigs = np.sort(
            np.concatenate(
                [np.linalg.eigvalsh(b.astype(float)) for b in dm.square_blocks()]
            )
        )
        assert np.allclose(np.sort(eigs), lap_eigs, atol=1e-8)


class TestBetti:
    def test_betti_equals_homology(self, trefoil, figure_eight):
        for d in (trefoil, figure_eight):
            table = homology_table(d)
            assert betti_table(d) == table
            for (r, q), v in table.items():
                assert betti(d, r, q) == v

    def test_trefoil_anchors(self, trefoil):
        assert betti(trefoil, 0, 3) == 1
        assert sum(v for (r, _), v in betti_table(trefoil).items() if r == 0) == 2


class TestPolynomials:
    def test_trefoil_jones(self, trefoil):
        assert jones_polynomial(trefoil) == LaurentPoly({2: 1, 6: 1, 8: -1})

    def test_figure_eight_jones(self, figure_eight):
        assert jones_polynomial(figure_eight) == LaurentPoly(
            {-4: 1, 0: 1, 4: 1, -2: -1, 2: -1}
        )

    def test_mirror_inverts_q(self, trefoil):
        j = jones_polynomial(trefoil)
        jm = jones_polynomial(mirror_diagram(trefoil))
        assert jm == j.substitute_inverse()

    def test_poincare_at_minus_one_gives_jones(self, figure_eight):
        p = poincare_polynomial(figure_eight)
        unknot = LaurentPoly({1: 1, -1: 1})
        assert p.at_t(-1).divide_exact(unknot) == jones_polynomial(figure_eight)

    def test_determinants(self, trefoil, figure_eight):
        assert knot_determinant(trefoil) == 3
        assert knot_determinant(figure_eight) == 5


class TestTables:
    def test_spectra_table_keys_match_chain_support(self, trefoil):
        table = spectra_table(trefoil)
        assert (0, 3) in table and (1, 5) in table
        assert all(len(s.values) > 0 for s in table.values())

    def test_spectrum_values_sorted_nonnegative(self, figure_eight):
        for s in spectra_table(figure_eight).values():
            vals = list(s.values)
            assert vals == sorted(vals)
            assert all(v > -1e-8 for v in vals)
