"""Benchmark the Jacobi eigensolver backends: numba kernel vs pure numpy.

Runs both implementations on random symmetric matrices and on Laplacians of
a mid-size knot, checks they agree, and prints timings.  The numpy path is
what you get with KHOVLAP_NO_NUMBA=1; this script calls both directly.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from khovlap import iter_bundled_table, laplacian  # noqa: E402
from khovlap._kernels import (  # noqa: E402
    CONVERGENCE_REL,
    MAX_SWEEPS,
    _get_numba_kernel,
    _jacobi_sweeps_py,
    use_numba,
)


def run(kernel, matrix: np.ndarray) -> tuple[np.ndarray, float]:
    a = matrix.astype(np.float64, copy=True)
    threshold = CONVERGENCE_REL * np.sqrt(np.sum(a * a))
    start = time.perf_counter()
    sweeps = kernel(a, threshold, MAX_SWEEPS)
    elapsed = time.perf_counter() - start
    assert sweeps >= 0, "did not converge"
    return np.sort(np.diag(a)), elapsed


def bench(name: str, matrix: np.ndarray) -> None:
    numba_kernel = _get_numba_kernel("jacobi")
    vals_nb, t_nb = run(numba_kernel, matrix)
    vals_py, t_py = run(_jacobi_sweeps_py, matrix)
    err = float(np.max(np.abs(vals_nb - vals_py))) if matrix.size else 0.0
    ref = np.sort(np.linalg.eigvalsh(matrix.astype(np.float64)))
    lapack_err = float(np.max(np.abs(vals_nb - ref)))
    print(
        f"{name:<28} n={matrix.shape[0]:>4}  numba {t_nb * 1e3:9.2f} ms  "
        f"numpy {t_py * 1e3:9.2f} ms  speedup {t_py / max(t_nb, 1e-9):6.1f}x  "
        f"|numba-numpy| {err:.2e}  |numba-lapack| {lapack_err:.2e}"
    )


def main() -> None:
    if not use_numba():
        print("numba unavailable or disabled; nothing to compare")
        return
    # warm up the JIT so compile time is not measured
    _get_numba_kernel("jacobi")(np.eye(3), 1e-12, MAX_SWEEPS)

    rng = np.random.default_rng(7)
    for n in (32, 96, 192, 384):
        x = rng.normal(size=(n, n))
        bench(f"random gaussian", x + x.T)

    d = dict(iter_bundled_table())["8_12"]
    for cell in ((0, 1), (1, 3), (-1, -3)):
        lap = laplacian(d, *cell)
        if lap.dim:
            bench(f"8_12 laplacian {cell}", lap.matrix.astype(np.float64))


if __name__ == "__main__":
    main()
