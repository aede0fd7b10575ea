"""Laplacians, Diracs, spectra, Betti numbers and the derived polynomials.

Laplacian products are carried out in exact integer arithmetic; only the
eigensolve itself is floating point.  Zero eigenvalues are counted with a
relative threshold and always cross-checked against the exact rank oracle,
which is authoritative.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass

import numpy as np

from ._kernels import jacobi_eigenvalues
from .chain import complex_for
from .errors import EigenConvergenceError, OracleMismatchError
from .oracle import exact_rank, homology_rank
from .pd import LinkDiagram
from .poly import BivariatePoly, LaurentPoly

ZERO_EPS_REL = 1e-8

# Jacobi is quadratic-per-sweep in matrix dimension and single threaded;
# past this dimension the LAPACK dense symmetric solver takes over.
JACOBI_MAX_DIM = int(os.environ.get("KHOVLAP_JACOBI_MAX", "192"))


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalue multiset with the zero-threshold policy applied."""

    values: tuple[float, ...]
    zero_threshold: float

    @property
    def zero_multiplicity(self) -> int:
        return sum(1 for v in self.values if abs(v) < self.zero_threshold)

    @property
    def least_nonzero(self) -> float | None:
        nonzero = [v for v in self.values if abs(v) >= self.zero_threshold]
        return min(nonzero) if nonzero else None

    def matches(self, other: "Spectrum | list | tuple", tol: float = 1e-6) -> bool:
        """Multiset equality: sorted values agree pairwise within ``tol``."""
        vals = other.values if isinstance(other, Spectrum) else tuple(sorted(other))
        if len(vals) != len(self.values):
            return False
        return all(abs(a - b) <= tol for a, b in zip(self.values, vals))


def _zero_threshold(values: np.ndarray) -> float:
    lam_max = float(np.max(np.abs(values))) if values.size else 0.0
    return ZERO_EPS_REL * max(1.0, lam_max)


def sym_eigenvalues(matrix: np.ndarray, tol: float = 1e-12) -> Spectrum:
    """Full spectrum of a symmetric matrix.

    Cyclic Jacobi rotations up to JACOBI_MAX_DIM, the LAPACK dense solver
    beyond; the two are cross-validated in the test suite.
    """
    a = np.asarray(matrix)
    try:
        if a.shape[0] > JACOBI_MAX_DIM:
            values = np.linalg.eigvalsh(a.astype(np.float64))
        else:
            values = jacobi_eigenvalues(a, rel_tol=tol)
    except (RuntimeError, np.linalg.LinAlgError) as exc:
        raise EigenConvergenceError(str(exc)) from exc
    return Spectrum(tuple(float(v) for v in values), _zero_threshold(values))


@dataclass(frozen=True)
class Laplacian:
    """Graded Laplacian with its up/down parts, exact integer matrices."""

    r: int
    q: int
    up: np.ndarray
    down: np.ndarray

    @property
    def matrix(self) -> np.ndarray:
        return self.up + self.down

    @property
    def dim(self) -> int:
        return self.up.shape[0]


def laplacian(d: LinkDiagram, r: int, q: int) -> Laplacian:
    """Khovanov Laplacian of cell (r, q): (d^r)* d^r + d^{r-1} (d^{r-1})*."""
    cx = complex_for(d)
    d_r = cx.matrix(r, q).to_dense()
    d_prev = cx.matrix(r - 1, q).to_dense()
    up = d_r.T @ d_r
    down = d_prev @ d_prev.T
    return Laplacian(r, q, up, down)


@dataclass(frozen=True)
class DiracMatrix:
    """Block tridiagonal Dirac over heights -n_minus .. r+1 at fixed q."""

    r: int
    q: int
    matrix: np.ndarray
    block_dims: tuple[int, ...]
    heights: tuple[int, ...]

    def square_blocks(self) -> list[np.ndarray]:
        """Diagonal blocks of the squared Dirac, in height order."""
        sq = self.matrix @ self.matrix
        out = []
        ofs = 0
        for m in self.block_dims:
            out.append(sq[ofs : ofs + m, ofs : ofs + m])
            ofs += m
        return out


def dirac(d: LinkDiagram, r: int, q: int) -> DiracMatrix:
    """Khovanov Dirac of cell (r, q): differentials and adjoints interleaved."""
    cx = complex_for(d)
    heights = tuple(range(-cx.n_minus, r + 2))
    dims = tuple(cx.dim(h, q) for h in heights)
    total = sum(dims)
    mat = np.zeros((total, total), dtype=np.int64)
    offsets = np.concatenate([[0], np.cumsum(dims)])
    for bi, h in enumerate(heights[:-1]):
        blk = cx.matrix(h, q).to_dense()  # shape (dims[bi+1], dims[bi])
        r0, r1 = offsets[bi + 1], offsets[bi + 2]
        c0, c1 = offsets[bi], offsets[bi + 1]
        mat[r0:r1, c0:c1] = blk
        mat[c0:c1, r0:r1] = blk.T
    return DiracMatrix(r, q, mat, dims, heights)


@functools.lru_cache(maxsize=100_000)
def _diff_nonzero_eigs(d: LinkDiagram, r: int, q: int) -> tuple[float, ...]:
    """Nonzero eigenvalues of (d^{r,q})* d^{r,q}, via the smaller Gram matrix."""
    a = complex_for(d).matrix(r, q).to_dense()
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        return ()
    # float64 Gram is exact here (entries +-1, inner products are small
    # integers) and hits BLAS instead of numpy's slow integer matmul
    af = a.astype(np.float64)
    g = af.T @ af if cols <= rows else af @ af.T
    spec = sym_eigenvalues(g)
    return tuple(v for v in spec.values if abs(v) >= spec.zero_threshold)


@functools.lru_cache(maxsize=100_000)
def _cell_spectrum(d: LinkDiagram, r: int, q: int) -> Spectrum:
    # The up and down parts commute with vanishing products (d o d = 0), so
    # the Laplacian spectrum is the union of their nonzero spectra, padded
    # with zeros up to the cell dimension.  Each Gram factor is much smaller
    # than the Laplacian of a large cell.
    n = complex_for(d).dim(r, q)
    up = _diff_nonzero_eigs(d, r, q)
    down = _diff_nonzero_eigs(d, r - 1, q)
    pad = n - len(up) - len(down)
    if pad < 0:
        raise OracleMismatchError(
            f"cell (r={r}, q={q}): rank overflow assembling the spectrum"
        )
    values = tuple(sorted((0.0,) * pad + up + down))
    threshold = _zero_threshold(np.asarray(values))
    nonzero = [v for v in values if v != 0.0]
    if nonzero:
        # never reclassify an eigenvalue the Gram factors kept as nonzero
        threshold = min(threshold, 0.5 * min(nonzero))
    return Spectrum(values, threshold)


def spectrum(d: LinkDiagram, r: int, q: int) -> Spectrum:
    """Laplacian spectrum S^{r,q} of the diagram."""
    return _cell_spectrum(d, r, q)


def betti(d: LinkDiagram, r: int, q: int) -> int:
    """Zero multiplicity of the (r, q) Laplacian, checked against the oracle."""
    cx = complex_for(d)
    if cx.dim(r, q) == 0:
        return 0
    spectral_rank = spectrum(d, r, q).zero_multiplicity
    exact = homology_rank(d, r, q)
    if spectral_rank != exact:
        raise OracleMismatchError(
            f"cell (r={r}, q={q}): eigensolver kernel dimension {spectral_rank} "
            f"!= exact homology rank {exact}"
        )
    return spectral_rank


def spectra_table(d: LinkDiagram) -> dict[tuple[int, int], Spectrum]:
    """Spectra of every nonempty cell, keyed by (r, q)."""
    cx = complex_for(d)
    return {(r, q): spectrum(d, r, q) for (r, q) in sorted(cx.basis())}


def betti_table(d: LinkDiagram) -> dict[tuple[int, int], int]:
    """Nonzero Betti numbers keyed by (r, q), spectral and oracle-checked."""
    cx = complex_for(d)
    out = {}
    for (r, q) in sorted(cx.basis()):
        b = betti(d, r, q)
        if b:
            out[(r, q)] = b
    return out


def poincare_polynomial(d: LinkDiagram) -> BivariatePoly:
    """Graded Poincare polynomial: sum of t^r q^j dim ker Delta^{r,j}."""
    return BivariatePoly({cell: b for cell, b in betti_table(d).items()})


def jones_polynomial(d: LinkDiagram) -> LaurentPoly:
    """Normalized Jones polynomial from the harmonic spectra.

    Evaluates the Poincare polynomial at t = -1 and divides by q + q^-1;
    a nonzero remainder indicates a computation bug and raises.
    """
    unnormalized = poincare_polynomial(d).at_t(-1)
    return unnormalized.divide_exact(LaurentPoly({1: 1, -1: 1}))


def knot_determinant(d: LinkDiagram) -> int:
    """|J(q)| at q^2 = -1; used to sanity-check table diagrams."""
    val = jones_polynomial(d)(1j)
    return round(abs(val))
