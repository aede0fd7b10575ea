import numpy as np
import pytest

from khovlap._kernels import jacobi_eigenvalues, rank_mod_p


def random_symmetric(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n))
    return a + a.T


class TestJacobi:
    def test_diagonal_matrix(self):
        vals = jacobi_eigenvalues(np.diag([3.0, 1.0, 2.0]))
        assert np.allclose(vals, [1.0, 2.0, 3.0])

    def test_matches_lapack(self):
        for n in (2, 5, 17, 40):
            a = random_symmetric(n, seed=n)
            assert np.allclose(
                jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-10
            )

    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError):
            jacobi_eigenvalues(np.ones((2, 3)))

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            jacobi_eigenvalues(np.array([[0.0, 1.0], [2.0, 0.0]]))

    def test_empty_and_scalar(self):
        assert jacobi_eigenvalues(np.zeros((0, 0))).size == 0
        assert np.allclose(jacobi_eigenvalues(np.array([[4.0]])), [4.0])

    def test_fallback_matches_jit(self, monkeypatch):
        import khovlap._kernels as k

        a = random_symmetric(23, seed=99)
        with_jit = jacobi_eigenvalues(a)
        monkeypatch.setattr(k, "use_numba", lambda: False)
        without_jit = k.jacobi_eigenvalues(a)
        assert np.allclose(with_jit, without_jit, atol=1e-10)


class TestRankModP:
    def test_identity(self):
        assert rank_mod_p(np.eye(6, dtype=np.int64)) == 6

    def test_dependent_rows(self):
        m = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]], dtype=np.int64)
        assert rank_mod_p(m) == 2

    def test_fallback_matches_jit(self, monkeypatch):
        import khovlap._kernels as k

        rng = np.random.default_rng(3)
        m = rng.integers(-5, 6, size=(20, 30)).astype(np.int64)
        with_jit = rank_mod_p(m)
        monkeypatch.setattr(k, "use_numba", lambda: False)
        assert k.rank_mod_p(m) == with_jit
