"""Dense brute-force referee for the Fourier-formula modules.

Builds the explicit adjacency matrix of G(r, N) and diagonalises it with a
cyclic-by-row Jacobi method. Nothing here uses the circulant structure, so
agreement with :mod:`circulant_energy.spectrum` is an independent check.
"""

from __future__ import annotations

import math

import numba
import numpy as np

from .spectrum import GraphSpec

DEFAULT_MAX_SWEEPS = 64
DEFAULT_ORACLE_CAP = 512


class OracleError(RuntimeError):
    """Base class for failures of the dense oracle."""


class JacobiConvergenceError(OracleError):
    def __init__(self, sweeps: int, off_norm: float, tol: float):
        super().__init__(
            f"Jacobi did not converge in {sweeps} sweeps "
            f"(off-diagonal norm {off_norm:.3e} > tol {tol:.3e})"
        )
        self.sweeps = sweeps
        self.off_norm = off_norm
        self.tol = tol


class OracleSizeError(OracleError, ValueError):
    pass


def adjacency_matrix(spec: GraphSpec) -> np.ndarray:
    """0/1 adjacency matrix: (i, j) is an edge iff circular distance is in [1, r]."""
    idx = np.arange(spec.N)
    dist = np.abs(idx[:, None] - idx[None, :])
    dist = np.minimum(dist, spec.N - dist)
    return ((dist >= 1) & (dist <= spec.r)).astype(np.float64)


@numba.njit(cache=True)
def _off_norm(a):
    n = a.shape[0]
    s = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            s += a[i, j] * a[i, j]
    return math.sqrt(2.0 * s)


@numba.njit(cache=True)
def _jacobi_sweeps(a, tol, max_sweeps):
    """Rotate ``a`` in place towards diagonal form.

    Returns (sweeps used, final off-diagonal Frobenius norm); sweeps is -1 when
    ``max_sweeps`` ran out.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = _off_norm(a)
        if off < tol:
            return sweep, off
        # early sweeps skip rotations on entries that are already small
        thresh = 0.2 * off / (n * n) if sweep < 3 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0 or abs(apq) <= thresh:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
    off = _off_norm(a)
    if off < tol:
        return max_sweeps, off
    return -1, off


def jacobi_eigenvalues(
    m: np.ndarray,
    off_diag_tol: float | None = None,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> np.ndarray:
    """Eigenvalues of the symmetric matrix ``m``, sorted ascending.

    ``off_diag_tol`` defaults to ``1e-12 * order``. Raises
    :class:`JacobiConvergenceError` if the off-diagonal Frobenius norm is still
    above tolerance after ``max_sweeps`` sweeps. ``m`` itself is not modified.
    """
    a = np.array(m, dtype=np.float64, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    if off_diag_tol is None:
        off_diag_tol = 1e-12 * n
    if off_diag_tol <= 0:
        raise ValueError("off_diag_tol must be positive")
    if max_sweeps < 1:
        raise ValueError("max_sweeps must be >= 1")
    used, off = _jacobi_sweeps(a, float(off_diag_tol), int(max_sweeps))
    if used < 0:
        raise JacobiConvergenceError(max_sweeps, off, off_diag_tol)
    return np.sort(np.diag(a).copy())


def oracle_spectrum(spec: GraphSpec, cap: int = DEFAULT_ORACLE_CAP) -> np.ndarray:
    if spec.N > cap:
        raise OracleSizeError(f"N={spec.N} exceeds the dense oracle cap of {cap}")
    return jacobi_eigenvalues(adjacency_matrix(spec))


def energy_oracle(spec: GraphSpec, cap: int = DEFAULT_ORACLE_CAP) -> float:
    return math.fsum(np.abs(oracle_spectrum(spec, cap)))
