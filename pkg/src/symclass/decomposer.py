"""Minimal diagonal decompositions of symmetric states.

A symmetric state with Dicke coefficients d_a has moments
m_a = d_a / sqrt(C(N, a)). A decomposition sum_k c_k |x_k>^{(x) N} with
|x_k> = x_k|0> + y_k|1> exists iff m_a = sum_k c_k x_k^(N-a) y_k^a, so the
minimal D is the Waring rank of the binary form with these moments. It is
found from the kernels of the Hankel (catalecticant) matrices

    H_r[i, j] = m_(i+j),  0 <= i <= N - r,  0 <= j <= r,

whose kernel vectors g are binary forms G = sum_j g_j x^(r-j) y^j vanishing
on every decomposition point. The smallest r whose kernel holds a form with
r distinct roots, and whose Vandermonde fit is certified, is D.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np
import scipy.linalg as sla

from .config import DEFAULT, ToleranceConfig
from .numerics import (
    binary_form_roots,
    canonical_point,
    min_separation,
    numerical_rank,
    sqrt_binomials,
)
from .symstate import (
    ProductPoint,
    SymmetricState,
    complex_to_json,
    from_decomposition,
    points_array,
    power_matrix,
)

# Components of unit points at or below this modulus are rounded to zero, so a
# point at infinity is reported as exactly (0, 1).
SNAP = 1e-14
MAJORANA_ZERO = 1e-14
MAJORANA_CLUSTER = 1e-5


class IllConditionedError(RuntimeError):
    """No decomposition could be certified at any r <= N + 1."""

    def __init__(self, message: str, condition_number: float):
        super().__init__(message)
        self.condition_number = condition_number


@dataclass(frozen=True, eq=False)
class MomentVector:
    n_parties: int
    moments: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.moments, dtype=complex).reshape(-1)
        if m.size != self.n_parties + 1:
            raise ValueError(f"expected {self.n_parties + 1} moments, got {m.size}")
        m.setflags(write=False)
        object.__setattr__(self, "moments", m)

    def matches(self, state: SymmetricState, atol: float = 1e-14) -> bool:
        return bool(np.allclose(self.moments * sqrt_binomials(self.n_parties), state.dicke, atol=atol, rtol=0))


@dataclass(frozen=True, eq=False)
class DiagonalDecomposition:
    n_parties: int
    points: tuple[ProductPoint, ...]
    weights: np.ndarray
    residual: float
    condition: float = 1.0

    def __post_init__(self) -> None:
        w = np.array(self.weights, dtype=complex).reshape(-1)
        if len(w) != len(self.points):
            raise ValueError("points and weights differ in length")
        if not 1 <= len(w) <= self.n_parties + 1:
            raise ValueError(f"bond dimension {len(w)} outside [1, N+1]")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "points", tuple(self.points))

    @property
    def bond_dim(self) -> int:
        return len(self.points)

    @property
    def infinity_point(self) -> int | None:
        for i, p in enumerate(self.points):
            if p.is_infinite:
                return i
        return None

    def points_array(self) -> np.ndarray:
        return points_array(self.points)

    def state(self) -> SymmetricState:
        return from_decomposition(self.points, self.weights, self.n_parties)


@dataclass(frozen=True, eq=False)
class KrausPair:
    """Diagonals of the site-independent matrices A_0 and A_1."""

    a0: np.ndarray
    a1: np.ndarray

    @property
    def bond_dim(self) -> int:
        return len(self.a0)

    def matrices(self) -> tuple[np.ndarray, np.ndarray]:
        return np.diag(self.a0), np.diag(self.a1)

    def dicke(self, n: int) -> np.ndarray:
        """Dicke coefficients of sum over bitstrings of Tr(A_mu1 ... A_muN)."""
        k = np.arange(n + 1)[:, None]
        amp = (self.a0[None, :] ** (n - k) * self.a1[None, :] ** k).sum(axis=1)
        return amp * sqrt_binomials(n)


@dataclass(frozen=True)
class MajoranaRoots:
    n_parties: int
    finite_roots: tuple[tuple[complex, int], ...]
    infinity_multiplicity: int
    leading: complex

    def __post_init__(self) -> None:
        total = sum(m for _, m in self.finite_roots) + self.infinity_multiplicity
        if total != self.n_parties:
            raise ValueError(f"multiplicities sum to {total}, expected {self.n_parties}")

    @property
    def degree(self) -> int:
        return self.n_parties - self.infinity_multiplicity

    @property
    def configuration(self) -> tuple[int, ...]:
        mults = [m for _, m in self.finite_roots]
        if self.infinity_multiplicity:
            mults.append(self.infinity_multiplicity)
        return tuple(sorted(mults, reverse=True))

    def monic_coefficients(self) -> np.ndarray:
        """Coefficients of prod (w - r)^m in ascending powers of w."""
        roots = [r for r, m in self.finite_roots for _ in range(m)]
        return np.poly(roots)[::-1] if roots else np.ones(1, dtype=complex)


def moments(state: SymmetricState) -> MomentVector:
    return MomentVector(state.n_parties, state.dicke / sqrt_binomials(state.n_parties))


def hankel_matrix(m: np.ndarray, r: int) -> np.ndarray:
    """(N - r + 1) x (r + 1) Hankel matrix of the moment vector."""
    n = len(m) - 1
    if not 0 <= r <= n + 1:
        raise ValueError(f"r must lie in [0, {n + 1}], got {r}")
    rows = n - r + 1
    idx = np.arange(rows)[:, None] + np.arange(r + 1)[None, :]
    return np.asarray(m, dtype=complex)[idx] if rows > 0 else np.zeros((0, r + 1), dtype=complex)


def hankel_kernel(m: np.ndarray, r: int, tol_rank: float) -> np.ndarray:
    """Orthonormal basis (columns) of the numerical kernel of H_r."""
    h = hankel_matrix(m, r)
    if h.shape[0] == 0:
        return np.eye(r + 1, dtype=complex)
    _, s, vh = np.linalg.svd(h, full_matrices=True)
    return vh[numerical_rank(s, tol_rank):].conj().T


def _echelon_basis(ker: np.ndarray) -> np.ndarray:
    """Kernel basis with an identity block on pivot coordinates."""
    k = ker.shape[1]
    _, _, piv = sla.qr(ker.T, pivoting=True, mode="economic")
    basis = ker @ np.linalg.inv(ker[piv[:k], :])
    return basis / np.linalg.norm(basis, axis=0, keepdims=True)


@dataclass
class _Candidate:
    points: np.ndarray
    weights: np.ndarray
    residual: float
    condition: float

    @property
    def has_infinity(self) -> bool:
        return bool(np.any(self.points[:, 0] == 0))

    def key(self) -> tuple[bool, float]:
        # Near-equal conditions tie, and the earlier (echelon) candidate wins.
        return (self.has_infinity, float(f"{self.condition:.9g}"))


def _fit(points: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, float, float]:
    n = len(d) - 1
    v = power_matrix(points, n)
    w, *_ = np.linalg.lstsq(v, d, rcond=None)
    resid = float(np.linalg.norm(v @ w - d) / np.linalg.norm(d))
    return w, resid, float(np.linalg.cond(v))


def _candidate(g: np.ndarray, d: np.ndarray, tol: ToleranceConfig) -> _Candidate | None:
    pts = np.array([canonical_point(p, snap=SNAP) for p in binary_form_roots(g)])
    if len(pts) > 1 and min_separation(pts) <= tol.tol_sep:
        return None
    if np.count_nonzero(pts[:, 0] == 0) > 1:
        return None
    w, resid, cond = _fit(pts, d)
    return _Candidate(pts, w, resid, cond)


def _point_order(p: np.ndarray) -> tuple:
    if p[0] == 0:
        return (1, 0.0, 0.0)
    z = p[1] / p[0]
    return (0, round(z.real, 10), round(z.imag, 10))


def decompose(state: SymmetricState, tol: ToleranceConfig = DEFAULT) -> DiagonalDecomposition:
    """Certified decomposition with the minimal number of tensor-power terms.

    For each r = 1..N+1 the kernel of H_r is searched for squarefree forms.
    When the kernel is one-dimensional its only form is tried; otherwise the
    echelon basis of the kernel and ``tol.kernel_samples`` seeded random
    combinations are tried. A candidate is certified when its roots are
    separated by more than ``tol_sep``, the least-squares weights reproduce the
    state to ``tol_resid`` and the Vandermonde condition number is at most
    ``max_cond``. Among certified candidates, finite point sets are preferred,
    then the best conditioned. If no r certifies, IllConditionedError carries
    the best condition number that was seen.
    """
    d = state.dicke
    n = state.n_parties
    m = moments(state).moments
    rng = np.random.default_rng(tol.seed)
    best_seen = np.inf
    for r in range(1, n + 2):
        ker = hankel_kernel(m, r, tol.tol_rank)
        dim = ker.shape[1]
        if dim == 0:
            continue
        if dim == 1:
            trials = [ker[:, 0]]
        else:
            trials = list(_echelon_basis(ker).T)
            for _ in range(tol.kernel_samples):
                coeff = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
                trials.append(ker @ coeff)
        chosen: _Candidate | None = None
        for g in trials:
            cand = _candidate(g, d, tol)
            if cand is None or cand.residual > tol.tol_resid:
                continue
            best_seen = min(best_seen, cand.condition)
            if cand.condition > tol.max_cond:
                continue
            if chosen is None or cand.key() < chosen.key():
                chosen = cand
        if chosen is not None:
            order = sorted(range(r), key=lambda i: _point_order(chosen.points[i]))
            pts = chosen.points[order]
            return DiagonalDecomposition(
                n_parties=n,
                points=tuple(ProductPoint.from_array(p) for p in pts),
                weights=chosen.weights[order],
                residual=chosen.residual,
                condition=chosen.condition,
            )
    raise IllConditionedError(
        f"no certified decomposition up to D={n + 1}; best Vandermonde condition {best_seen:.3e}",
        condition_number=float(best_seen),
    )


def optimal_bond_dimension(state: SymmetricState, tol: ToleranceConfig = DEFAULT) -> int:
    return decompose(state, tol).bond_dim


def fit_weights(points: Sequence[ProductPoint], state: SymmetricState) -> tuple[np.ndarray, float]:
    """Least-squares weights for fixed points, with the relative residual."""
    w, resid, _ = _fit(points_array(points), state.dicke)
    return w, resid


def kraus_pair(dec: DiagonalDecomposition) -> KrausPair:
    """A_mu[k, k] = c_k^(1/N) <mu|x_k>, principal branch of the root."""
    root = np.power(dec.weights.astype(complex), 1.0 / dec.n_parties)
    pts = dec.points_array()
    return KrausPair(a0=root * pts[:, 0], a1=root * pts[:, 1])


def majorana_roots(state: SymmetricState, cluster_tol: float = MAJORANA_CLUSTER) -> MajoranaRoots:
    """Roots of p(w) = sum_a sqrt(C(N, a)) d_a w^a with multiplicities.

    Coefficients below ``MAJORANA_ZERO`` relative to the largest are treated
    as zero when reading off the degree and the multiplicity of w = 0. Other
    roots are merged when closer than ``cluster_tol`` in chordal distance.
    """
    n = state.n_parties
    p = sqrt_binomials(n) * state.dicke
    big = np.abs(p) > MAJORANA_ZERO * np.abs(p).max()
    nz = np.flatnonzero(big)
    low, deg = int(nz[0]), int(nz[-1])
    core = p[low : deg + 1].copy()
    core[~big[low : deg + 1]] = 0.0
    pts = binary_form_roots(core)
    found: list[tuple[complex, int]] = []
    if low:
        found.append((0j, low))
    clusters: list[list[np.ndarray]] = []
    for pt in pts:
        for cl in clusters:
            if min_separation(np.vstack([cl[0], pt])) <= cluster_tol:
                cl.append(pt)
                break
        else:
            clusters.append([pt])
    for cl in clusters:
        zs = [q[1] / q[0] for q in cl]
        found.append((complex(np.mean(zs)), len(cl)))
    found.sort(key=lambda t: (-t[1], round(t[0].real, 10), round(t[0].imag, 10)))
    return MajoranaRoots(n, tuple(found), n - deg, complex(p[deg]))


def schmidt_binary_rank(state: SymmetricState, m: int, tol: ToleranceConfig = DEFAULT) -> int:
    """Schmidt rank across the M | N-M cut, from the singular values of Psi_M."""
    from .hamiltonian import bipartition_map

    psi = bipartition_map(state, m).matrix
    return numerical_rank(np.linalg.svd(psi, compute_uv=False), tol.tol_rank)


def extend_nesting(dec: DiagonalDecomposition, extra: int = 1) -> SymmetricState:
    """The same points and weights on N + extra parties."""
    if extra < 1:
        raise ValueError(f"extra must be >= 1, got {extra}")
    return from_decomposition(dec.points, dec.weights, dec.n_parties + extra)


def pairwise_independent(points: Sequence[ProductPoint | Sequence[complex]], tol: ToleranceConfig = DEFAULT) -> bool:
    pts = points_array(points)
    if len(pts) == 0:
        raise ValueError("at least one point is required")
    return min_separation(pts) > tol.tol_sep


def decomposition_to_json(dec: DiagonalDecomposition) -> dict[str, Any]:
    return {
        "n": dec.n_parties,
        "d": dec.bond_dim,
        "points": [[complex_to_json(p.x), complex_to_json(p.y)] for p in dec.points],
        "weights": [complex_to_json(w) for w in dec.weights],
        "residual": dec.residual,
        "vandermonde_cond": dec.condition,
        "infinity_point": dec.infinity_point,
    }
