"""Binomials, numerical rank and projective root finding."""
from __future__ import annotations

import math

import numpy as np
import scipy.linalg as sla

EXACT_BINOM_MAX = 60


def binom(n: int, k: int) -> float:
    """C(n, k) as a float: exact integers up to n = 60, log-gamma above."""
    if k < 0 or k > n:
        return 0.0
    if n <= EXACT_BINOM_MAX:
        return float(math.comb(n, k))
    return math.exp(math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1))


def binomial_row(n: int) -> np.ndarray:
    return np.array([binom(n, k) for k in range(n + 1)])


def sqrt_binomials(n: int) -> np.ndarray:
    return np.sqrt(binomial_row(n))


def numerical_rank(singular_values: np.ndarray, tol_rank: float) -> int:
    """Count singular values above ``tol_rank`` times the largest one."""
    s = np.asarray(singular_values, dtype=float)
    if s.size == 0 or s.max() == 0.0:
        return 0
    return int(np.count_nonzero(s > tol_rank * s.max()))


def chordal_distance(p: np.ndarray, q: np.ndarray) -> float:
    """|p0 q1 - p1 q0| / (|p| |q|), the sine of the angle between two lines."""
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    return float(abs(p[0] * q[1] - p[1] * q[0]) / (np.linalg.norm(p) * np.linalg.norm(q)))


def min_separation(points: np.ndarray) -> float:
    """Smallest pairwise chordal distance of the rows of a (r, 2) array."""
    pts = np.asarray(points, dtype=complex)
    if len(pts) < 2:
        return 1.0
    unit = pts / np.linalg.norm(pts, axis=1, keepdims=True)
    det = np.abs(np.outer(unit[:, 0], unit[:, 1]) - np.outer(unit[:, 1], unit[:, 0]))
    iu = np.triu_indices(len(pts), k=1)
    return float(det[iu].min())


def binary_form_roots(coeffs: np.ndarray) -> np.ndarray:
    """Projective roots of G(x, y) = sum_j g_j x^(r-j) y^j.

    Returns an (r, 2) array of unit rows (x, y). Roots at infinity (x = 0)
    come out of the generalized eigenproblem of the companion pencil without
    any thresholding on the leading coefficient.
    """
    g = np.asarray(coeffs, dtype=complex)
    r = len(g) - 1
    if r <= 0:
        return np.zeros((0, 2), dtype=complex)
    scale = np.linalg.norm(g)
    if scale == 0.0:
        raise ValueError("the zero form has no well-defined roots")
    g = g / scale
    a = np.zeros((r, r), dtype=complex)
    b = np.eye(r, dtype=complex)
    a[0, :] = -g[::-1][1:]
    b[0, 0] = g[-1]
    if r > 1:
        a[1:, :-1] = np.eye(r - 1)
    ev = sla.eig(a, b, right=False, homogeneous_eigvals=True)
    alpha, beta = ev[0], ev[1]
    pts = np.stack([beta, alpha], axis=1)
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def canonical_point(p: np.ndarray, snap: float = 0.0) -> np.ndarray:
    """Unit norm, first nonzero component real positive.

    Components with modulus at or below ``snap`` (after normalization) are set
    to exactly zero so that points at 0 and infinity are represented exactly.
    """
    v = np.asarray(p, dtype=complex).copy()
    v /= np.linalg.norm(v)
    if snap > 0.0:
        v[np.abs(v) <= snap] = 0.0
        v /= np.linalg.norm(v)
    lead = v[0] if v[0] != 0 else v[1]
    return v * (abs(lead) / lead)
