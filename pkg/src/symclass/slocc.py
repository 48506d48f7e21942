"""Symmetric invertible local operations A^{(x) N} on Dicke coordinates."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from .numerics import binom, sqrt_binomials
from .symstate import SymmetricState, complex_from_json, complex_to_json

TOL_DET = 1e-12
DEFAULT_CONDITION_CAP = 50.0


@dataclass(frozen=True)
class ILO:
    """The 2x2 matrix [[a, b], [c, d]] applied to every qubit."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self) -> None:
        for name in "abcd":
            object.__setattr__(self, name, complex(getattr(self, name)))
        if abs(self.det) <= TOL_DET:
            raise ValueError(f"ILO is not invertible: |det| = {abs(self.det):.3e}")

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def condition_number(self) -> float:
        return float(np.linalg.cond(self.matrix))

    def inverse(self) -> "ILO":
        return ILO.from_matrix(np.linalg.inv(self.matrix))

    def __matmul__(self, other: "ILO") -> "ILO":
        return ILO.from_matrix(self.matrix @ other.matrix)

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "ILO":
        m = np.asarray(m, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @classmethod
    def identity(cls) -> "ILO":
        return cls(1, 0, 0, 1)


@dataclass(frozen=True, eq=False)
class SymmetricOperatorRep:
    n_parties: int
    matrix: np.ndarray


def symmetric_power_rep(op: ILO, n: int) -> SymmetricOperatorRep:
    """Restriction of A^{(x) N} to the symmetric subspace, in the Dicke basis.

    A maps |0> to a|0> + c|1> and |1> to b|0> + d|1>. Acting on the
    monomial |0>^{N-k}|1>^k (symmetrized) gives the product of the binomial
    expansions of the two images, i.e. a polynomial convolution.
    """
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    a, b, c, d = op.a, op.b, op.c, op.d
    sq = sqrt_binomials(n)
    out = np.zeros((n + 1, n + 1), dtype=complex)
    for k in range(n + 1):
        zeros = np.array([binom(n - k, j) * a ** (n - k - j) * c ** j for j in range(n - k + 1)])
        ones = np.array([binom(k, j) * b ** (k - j) * d ** j for j in range(k + 1)])
        out[:, k] = np.convolve(zeros, ones) * sq[k] / sq
    return SymmetricOperatorRep(n, out)


def apply_ilo(state: SymmetricState, op: ILO) -> SymmetricState:
    rep = symmetric_power_rep(op, state.n_parties)
    return SymmetricState(state.n_parties, rep.matrix @ state.dicke)


def apply_to_points(op: ILO, points: np.ndarray) -> np.ndarray:
    """Transform (r, 2) rows (x, y) by A, treating them as column vectors."""
    return (op.matrix @ np.asarray(points, dtype=complex).T).T


def random_ilo(seed: int | np.random.Generator, condition_cap: float = DEFAULT_CONDITION_CAP) -> ILO:
    """Seeded random invertible 2x2 matrix with condition number <= cap.

    A complex Ginibre draw supplies the singular vectors; the singular value
    ratio is the Ginibre one, clamped at the cap. The larger singular value is
    set to one, so cap = 1 yields a unitary.
    """
    if condition_cap < 1.0:
        raise ValueError(f"condition_cap must be >= 1, got {condition_cap}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    g = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / np.sqrt(2.0)
    u, s, vh = np.linalg.svd(g)
    ratio = max(s[1] / s[0], 1.0 / condition_cap)
    return ILO.from_matrix(u @ np.diag([1.0, ratio]) @ vh)


def ilo_to_json(op: ILO) -> list[list[float]]:
    return [complex_to_json(v) for v in (op.a, op.b, op.c, op.d)]


def ilo_from_json(obj: Any) -> ILO:
    """Parse ``[[a_re,a_im],[b_re,b_im],[c_re,c_im],[d_re,d_im]]``."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, list) or len(obj) != 4:
        raise ValueError("ILO JSON must be a list of four [re, im] pairs")
    return ILO(*(complex_from_json(v) for v in obj))
