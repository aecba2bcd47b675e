"""Small dense linear-algebra helpers shared by the solvers.

Everything here is desk-scale: matrices are a few hundred rows at most, so
dense factorizations and vectorized Stein/Lyapunov solves are the right tool.
Zero-dimensional blocks (an absent environment state) are legal throughout.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg


def as_f64(x) -> np.ndarray:
    a = np.asarray(x, dtype=np.float64)
    return a


def sym(a: np.ndarray) -> np.ndarray:
    """Symmetric part of ``a``."""
    return 0.5 * (a + a.T)


def is_symmetric(a: np.ndarray, tol: float = 1e-10) -> bool:
    if a.size == 0:
        return a.shape[0] == a.shape[1]
    scale = max(1.0, float(np.max(np.abs(a))))
    return bool(np.max(np.abs(a - a.T)) <= tol * scale)


def min_eig_sym(a: np.ndarray) -> float:
    """Smallest eigenvalue of a symmetric matrix; +inf for a 0x0 block."""
    if a.size == 0:
        return float("inf")
    return float(scipy.linalg.eigvalsh(sym(a))[0])


def spectral_radius(a: np.ndarray) -> float:
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(np.linalg.eigvals(a))))


def spd_solve(a: np.ndarray, b: np.ndarray, name: str = "matrix") -> np.ndarray:
    """Solve ``a x = b`` for symmetric positive definite ``a``.

    Raises ValueError naming the offending matrix and its minimum eigenvalue
    instead of silently falling back to a pseudo-inverse.
    """
    if a.shape[0] == 0:
        return np.zeros((0,) + b.shape[1:])
    try:
        c, low = scipy.linalg.cho_factor(sym(a))
    except np.linalg.LinAlgError:
        raise ValueError(
            f"{name} is not positive definite (min eigenvalue {min_eig_sym(a):.3e})"
        ) from None
    return scipy.linalg.cho_solve((c, low), b)


def stein_solve(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Solve ``V = a V b + c`` (discrete Sylvester/Stein equation).

    Solvable iff no eigenvalue product lambda_i(a) * mu_j(b) equals 1; in our
    use both factors have spectral radius < 1.  Solved by vectorization,
    which is exact and cheap at the sizes that occur here.
    """
    m, n = c.shape
    if m == 0 or n == 0:
        return np.zeros((m, n))
    eye = np.eye(m * n)
    k = np.kron(b.T, a)
    v = np.linalg.solve(eye - k, c.flatten(order="F"))
    return v.reshape((m, n), order="F")


def dlyap(a: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Solve ``X = a X a' + q``."""
    if a.shape[0] == 0:
        return np.zeros((0, 0))
    return scipy.linalg.solve_discrete_lyapunov(a, sym(q))


def psd_factor(cov: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Factor ``L`` with ``L L' = cov`` for a symmetric PSD matrix.

    Eigenvalue-based so that rank-deficient covariances (noise-free blocks)
    factor cleanly; tiny negative eigenvalues from roundoff are clipped.
    """
    if cov.size == 0:
        return np.zeros(cov.shape)
    w, v = scipy.linalg.eigh(sym(cov))
    scale = max(1.0, float(np.max(np.abs(w))))
    if w[0] < -tol * scale:
        raise ValueError(f"covariance has negative eigenvalue {w[0]:.3e}")
    w = np.clip(w, 0.0, None)
    return v * np.sqrt(w)


def conditional_affine(
    cov_xy: np.ndarray, cov_yy: np.ndarray, mean_x: np.ndarray, mean_y: np.ndarray
):
    """Affine map of the Gaussian conditional mean E[x | y].

    Returns ``(J, c)`` with ``E[x | y] = J y + c``.  Uses the pseudo-inverse,
    which yields a valid version of the conditional expectation when the
    conditioning covariance is singular.
    """
    if cov_yy.shape[0] == 0:
        return np.zeros((mean_x.shape[0], 0)), mean_x.copy()
    j = cov_xy @ np.linalg.pinv(sym(cov_yy), hermitian=True)
    return j, mean_x - j @ mean_y


def pbh_stabilizable(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> bool:
    """Eigenvalue-wise PBH rank test for stabilizability of ``(a, b)``.

    Every eigenvalue on or outside the unit circle must leave
    ``[a - lambda I, b]`` at full row rank (smallest singular value above
    ``tol`` relative to the matrix scale).
    """
    n = a.shape[0]
    if n == 0:
        return True
    scale = max(1.0, float(np.linalg.norm(np.hstack([a, b]))))
    for lam in np.linalg.eigvals(a):
        if abs(lam) < 1.0 - 1e-12:
            continue
        m = np.hstack([a - lam * np.eye(n), b]).astype(complex)
        s = np.linalg.svd(m, compute_uv=False)
        if s[-1] <= tol * scale:
            return False
    return True
