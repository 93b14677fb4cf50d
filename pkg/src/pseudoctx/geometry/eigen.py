"""Eigen-decomposition of real symmetric 3x3 matrices.

The closed form solves the characteristic cubic by the trigonometric method
and takes eigenvectors from cross products of rows of ``M - lam I``.  That
loses accuracy when two eigenvalues nearly coincide, so in that case (or
whenever the residual check fails) cyclic Jacobi rotations are used instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import acos, copysign, cos, hypot, pi, sqrt

import numpy as np

__all__ = ["EigenDecomposition3", "eigen_sym3", "jacobi_sym3", "closed_form_sym3"]

# relative eigenvalue gap below which cross-product eigenvectors are not trusted
_GAP = 1e-6
_RESIDUAL = 1e-10


@dataclass(frozen=True)
class EigenDecomposition3:
    eigenvalues: np.ndarray  # ascending
    eigenvectors: np.ndarray  # column i pairs with eigenvalues[i]
    method: str

    def residual(self, m: np.ndarray) -> float:
        return float(np.abs(m @ self.eigenvectors - self.eigenvectors * self.eigenvalues).max())


def _as_sym(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(1.0, np.abs(a).max())):
        raise ValueError("matrix is not symmetric")
    return (a + a.T) / 2


def _cubic_roots(a: np.ndarray) -> list[float]:
    p1 = a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2
    if p1 == 0:
        return sorted(float(x) for x in np.diag(a))
    q = np.trace(a) / 3
    p2 = (a[0, 0] - q) ** 2 + (a[1, 1] - q) ** 2 + (a[2, 2] - q) ** 2 + 2 * p1
    p = sqrt(p2 / 6)
    b = (a - q * np.eye(3)) / p
    r = min(1.0, max(-1.0, float(np.linalg.det(b)) / 2))
    phi = acos(r) / 3
    hi = q + 2 * p * cos(phi)
    lo = q + 2 * p * cos(phi + 2 * pi / 3)
    return [lo, 3 * q - hi - lo, hi]


def _null_vector(a: np.ndarray, lam: float) -> np.ndarray:
    s = a - lam * np.eye(3)
    cands = [np.cross(s[0], s[1]), np.cross(s[0], s[2]), np.cross(s[1], s[2])]
    best = max(cands, key=lambda v: float(v @ v))
    return best / np.linalg.norm(best)


def closed_form_sym3(m) -> EigenDecomposition3:
    a = _as_sym(m)
    vals = _cubic_roots(a)
    vecs = np.column_stack([_null_vector(a, lam) for lam in vals])
    return EigenDecomposition3(np.array(vals), vecs, "closed-form")


def jacobi_sym3(m, tol: float = 1e-15, max_sweeps: int = 50) -> EigenDecomposition3:
    a = _as_sym(m).copy()
    v = np.eye(3)
    scale = max(np.abs(a).max(), 1e-300)
    for _ in range(max_sweeps):
        off = sqrt(a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2)
        if off <= tol * scale:
            break
        for p, q in ((0, 1), (0, 2), (1, 2)):
            if a[p, q] == 0:
                continue
            theta = (a[q, q] - a[p, p]) / (2 * a[p, q])
            t = copysign(1.0, theta) / (abs(theta) + hypot(theta, 1.0)) if theta != 0 else 1.0
            c = 1 / sqrt(t * t + 1)
            s = t * c
            rot = np.eye(3)
            rot[p, p] = rot[q, q] = c
            rot[p, q], rot[q, p] = s, -s
            a = rot.T @ a @ rot
            v = v @ rot
    order = np.argsort(np.diag(a))
    return EigenDecomposition3(np.diag(a)[order].copy(), v[:, order], "jacobi")


def eigen_sym3(m) -> EigenDecomposition3:
    """Eigenvalues ascending with orthonormal eigenvectors as columns."""
    a = _as_sym(m)
    scale = max(np.abs(a).max(), 1.0)
    vals = _cubic_roots(a)
    if min(vals[1] - vals[0], vals[2] - vals[1]) > _GAP * scale:
        dec = closed_form_sym3(a)
        ortho = np.abs(dec.eigenvectors.T @ dec.eigenvectors - np.eye(3)).max()
        if dec.residual(a) <= _RESIDUAL * scale and ortho <= 1e-10:
            return dec
    return jacobi_sym3(a)
