"""Dense symmetric eigensolver kernels: cyclic Jacobi rotations.

Two interchangeable implementations: a numba-compiled scalar loop (default)
and a vectorized pure-numpy path.  Set ``KHOVLAP_NO_NUMBA=1`` to force the
numpy path; ``scripts/bench_eigensolver.py`` compares the two.
"""

from __future__ import annotations

import os

import numpy as np

MAX_SWEEPS = 100
CONVERGENCE_REL = 1e-12


def use_numba() -> bool:
    if os.environ.get("KHOVLAP_NO_NUMBA", "").strip() in ("1", "true", "yes"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def _off_norm(a: np.ndarray) -> float:
    # summed directly over off-diagonal entries; the subtraction
    # norm(a)^2 - norm(diag)^2 cancels to negative noise near convergence
    sq = a * a
    np.fill_diagonal(sq, 0.0)
    return float(np.sqrt(np.sum(sq)))


def _jacobi_sweeps_py(a: np.ndarray, threshold: float, max_sweeps: int) -> int:
    """Vectorized cyclic Jacobi; mutates ``a``; returns sweeps used or -1."""
    n = a.shape[0]
    for sweep in range(max_sweeps):
        if _off_norm(a) <= threshold:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    return -1 if _off_norm(a) > threshold else max_sweeps


def _jacobi_sweeps_scalar(a, threshold, max_sweeps):  # pragma: no cover - numba source
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j] * a[i, j]
        if np.sqrt(off) <= threshold:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    rp = a[p, k]
                    rq = a[q, k]
                    a[p, k] = c * rp - s * rq
                    a[q, k] = s * rp + c * rq
                for k in range(n):
                    cp = a[k, p]
                    cq = a[k, q]
                    a[k, p] = c * cp - s * cq
                    a[k, q] = s * cp + c * cq
    off = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                off += a[i, j] * a[i, j]
    return -1 if np.sqrt(off) > threshold else max_sweeps


# Gaussian elimination modulo a word-size prime: fast-path rank kernel for
# matrices too large for fraction-free elimination on Python integers.
# Products stay below 2^62, so int64 arithmetic is exact.
RANK_PRIME = 2_147_483_647


def _rank_mod_p_scalar(a, p):  # pragma: no cover - numba source
    rows, cols = a.shape
    pr = 0
    for pc in range(cols):
        pivot = -1
        for r in range(pr, rows):
            if a[r, pc] != 0:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != pr:
            for c in range(pc, cols):
                tmp = a[pr, c]
                a[pr, c] = a[pivot, c]
                a[pivot, c] = tmp
        # modular inverse by Fermat: p is prime
        inv = 1
        base = a[pr, pc] % p
        e = p - 2
        while e:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for r in range(pr + 1, rows):
            if a[r, pc] == 0:
                continue
            f = (a[r, pc] * inv) % p
            for c in range(pc + 1, cols):
                if a[pr, c] != 0:
                    a[r, c] = (a[r, c] - f * a[pr, c]) % p
            a[r, pc] = 0
        pr += 1
        if pr == rows:
            break
    return pr


def _rank_mod_p_py(a: np.ndarray, p: int) -> int:
    rows, cols = a.shape
    pr = 0
    for pc in range(cols):
        pivots = np.nonzero(a[pr:, pc])[0]
        if pivots.size == 0:
            continue
        pivot = pr + int(pivots[0])
        if pivot != pr:
            a[[pr, pivot]] = a[[pivot, pr]]
        inv = pow(int(a[pr, pc]), p - 2, p)
        f = (a[pr + 1 :, pc] * inv) % p
        live = np.nonzero(f)[0]
        if live.size:
            block = a[pr + 1 :, pc:]
            block[live] = (block[live] - np.outer(f[live], a[pr, pc:])) % p
        pr += 1
        if pr == rows:
            break
    return pr


def rank_mod_p(matrix: np.ndarray, p: int = RANK_PRIME) -> int:
    """Rank of an integer matrix over GF(p)."""
    a = np.ascontiguousarray(np.asarray(matrix, dtype=np.int64) % p)
    if a.size == 0:
        return 0
    if use_numba():
        return int(_get_numba_kernel("rank")(a, p))
    return _rank_mod_p_py(a, p)


_numba_kernels: dict = {}


def _get_numba_kernel(name: str):
    if name not in _numba_kernels:
        from numba import njit

        source = {"jacobi": _jacobi_sweeps_scalar, "rank": _rank_mod_p_scalar}[name]
        _numba_kernels[name] = njit(cache=True)(source)
    return _numba_kernels[name]


def jacobi_eigenvalues(
    matrix: np.ndarray,
    rel_tol: float = CONVERGENCE_REL,
    max_sweeps: int = MAX_SWEEPS,
) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, sorted nondecreasing.

    Convergence: off-diagonal Frobenius norm below ``rel_tol`` times the
    Frobenius norm of the input.  Returns an empty array for 0x0 input,
    raises RuntimeError if the sweep cap is exhausted.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.float64)
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    norm = np.sqrt(np.sum(a * a))
    threshold = rel_tol * max(norm, np.finfo(np.float64).tiny)
    if use_numba():
        sweeps = _get_numba_kernel("jacobi")(a, threshold, max_sweeps)
    else:
        sweeps = _jacobi_sweeps_py(a, threshold, max_sweeps)
    if sweeps < 0:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    return np.sort(np.diag(a))
