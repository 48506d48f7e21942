"""Permutation-symmetric qubit states in the Dicke basis.

A state on N qubits is stored as its N+1 Dicke coefficients d_k, the
amplitude on the normalized equal superposition of weight-k bitstrings.
Amplitudes of individual bitstrings are d_k / sqrt(C(N, k)).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

import numpy as np

from .config import DEFAULT, ToleranceConfig
from .numerics import canonical_point, sqrt_binomials

NAMED_FAMILIES = ("separable0", "dicke", "ghz", "w", "x")
X_DEFAULT_Z = 2.0 ** (-1.0 / 6.0)


class ZeroStateError(ValueError):
    """Raised when a state has no nonzero amplitude."""


class StateTooLargeError(ValueError):
    """Raised when a dense 2^N object is requested above the configured cap."""


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SymmetricState:
    n_parties: int
    dicke: np.ndarray

    def __post_init__(self) -> None:
        d = np.array(self.dicke, dtype=complex).reshape(-1)
        if self.n_parties < 1:
            raise ValueError(f"n_parties must be >= 1, got {self.n_parties}")
        if d.shape != (self.n_parties + 1,):
            raise ValueError(f"expected {self.n_parties + 1} Dicke coefficients, got {d.size}")
        if not np.all(np.isfinite(d)):
            raise ValueError("Dicke coefficients must be finite")
        if not np.any(np.abs(d) > 0):
            raise ZeroStateError("state has no nonzero Dicke coefficient")
        object.__setattr__(self, "dicke", _readonly(d))

    @property
    def n(self) -> int:
        return self.n_parties

    def norm(self) -> float:
        return float(np.linalg.norm(self.dicke))

    def normalize(self) -> "SymmetricState":
        return SymmetricState(self.n_parties, self.dicke / self.norm())

    def is_normalized(self, tol: ToleranceConfig = DEFAULT) -> bool:
        return abs(self.norm() ** 2 - 1.0) <= tol.tol_norm

    def __repr__(self) -> str:
        return f"SymmetricState(n_parties={self.n_parties}, dicke={np.array2string(self.dicke, precision=4)})"


@dataclass(frozen=True, eq=False)
class FullStateVector:
    n_parties: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if a.size != 2 ** self.n_parties:
            raise ValueError(f"expected {2 ** self.n_parties} amplitudes, got {a.size}")
        object.__setattr__(self, "amplitudes", _readonly(a))

    def is_permutation_invariant(self, atol: float = 1e-12) -> bool:
        """Exhaustive check that amplitudes depend only on Hamming weight."""
        weights = hamming_weights(self.n_parties)
        for k in range(self.n_parties + 1):
            block = self.amplitudes[weights == k]
            if np.max(np.abs(block - block[0])) > atol:
                return False
        return True


@dataclass(frozen=True)
class ProductPoint:
    """The single-qubit vector x|0> + y|1>, up to a nonzero scalar."""

    x: complex
    y: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", complex(self.x))
        object.__setattr__(self, "y", complex(self.y))
        if self.x == 0 and self.y == 0:
            raise ValueError("(0, 0) is not a projective point")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=complex)

    def canonical(self) -> "ProductPoint":
        v = canonical_point(self.as_array())
        return ProductPoint(v[0], v[1])

    @property
    def is_infinite(self) -> bool:
        return self.x == 0

    @property
    def slope(self) -> complex | None:
        """z = y / x, or None for the point at infinity."""
        return None if self.x == 0 else self.y / self.x

    @classmethod
    def from_array(cls, v: Sequence[complex]) -> "ProductPoint":
        return cls(complex(v[0]), complex(v[1]))


def hamming_weights(n: int) -> np.ndarray:
    idx = np.arange(2 ** n, dtype=np.int64)
    w = np.zeros_like(idx)
    for bit in range(n):
        w += (idx >> bit) & 1
    return w


def points_array(points: Iterable[ProductPoint | Sequence[complex]]) -> np.ndarray:
    rows = [p.as_array() if isinstance(p, ProductPoint) else np.asarray(p, dtype=complex) for p in points]
    if not rows:
        return np.zeros((0, 2), dtype=complex)
    return np.vstack(rows)


def dicke_state(n: int, k: int) -> SymmetricState:
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"Dicke excitation k must satisfy 0 <= k <= {n}, got {k}")
    d = np.zeros(n + 1, dtype=complex)
    d[k] = 1.0
    return SymmetricState(n, d)


def build_named(name: str, n: int, k: int | None = None, z: complex | None = None) -> SymmetricState:
    """Normalized member of a named family.

    ``x`` is |1>^N + z^(N-1) sqrt(N) |W_N>, defined for N >= 4 and z != 0;
    ``z`` defaults to 2^(-1/6).
    """
    name = name.lower()
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    if name == "separable0":
        return dicke_state(n, 0)
    if name == "dicke":
        if k is None:
            raise ValueError("the dicke family needs an excitation number k")
        return dicke_state(n, k)
    if name == "w":
        return dicke_state(n, 1)
    if name == "ghz":
        d = np.zeros(n + 1, dtype=complex)
        d[0] = d[n] = 1.0 / np.sqrt(2.0)
        return SymmetricState(n, d)
    if name == "x":
        if n < 4:
            raise ValueError(f"the x family needs N >= 4, got {n}")
        z = X_DEFAULT_Z if z is None else complex(z)
        if z == 0:
            raise ValueError("the x family needs z != 0")
        d = np.zeros(n + 1, dtype=complex)
        d[n] = 1.0
        d[1] = z ** (n - 1) * np.sqrt(n)
        return SymmetricState(n, d).normalize()
    raise ValueError(f"unknown family {name!r}; expected one of {', '.join(NAMED_FAMILIES)}")


def to_full_vector(state: SymmetricState, tol: ToleranceConfig = DEFAULT) -> FullStateVector:
    n = state.n_parties
    if n > tol.n_full_cap:
        raise StateTooLargeError(f"N={n} exceeds the dense cap {tol.n_full_cap}")
    amp = state.dicke / sqrt_binomials(n)
    return FullStateVector(n, amp[hamming_weights(n)])


def from_full_vector(vec: FullStateVector) -> SymmetricState:
    """Project a dense vector onto the symmetric subspace (Dicke coordinates)."""
    n = vec.n_parties
    weights = hamming_weights(n)
    sums = np.bincount(weights, weights=vec.amplitudes.real, minlength=n + 1) + 1j * np.bincount(
        weights, weights=vec.amplitudes.imag, minlength=n + 1
    )
    return SymmetricState(n, sums / sqrt_binomials(n))


def from_decomposition(
    points: Sequence[ProductPoint | Sequence[complex]], weights: Sequence[complex], n: int
) -> SymmetricState:
    """sum_k w_k |x_k>^{(x) N} in Dicke coordinates."""
    pts = points_array(points)
    w = np.asarray(weights, dtype=complex).reshape(-1)
    if len(pts) == 0:
        raise ValueError("at least one point is required")
    if len(pts) != len(w):
        raise ValueError(f"{len(pts)} points but {len(w)} weights")
    return SymmetricState(n, power_matrix(pts, n) @ w)


def power_matrix(points: np.ndarray, n: int) -> np.ndarray:
    """(N+1, r) matrix whose columns are Dicke vectors of |x_k>^{(x) N}."""
    pts = np.asarray(points, dtype=complex)
    alpha = np.arange(n + 1)[:, None]
    x = pts[:, 0][None, :]
    y = pts[:, 1][None, :]
    return sqrt_binomials(n)[:, None] * x ** (n - alpha) * y ** alpha


def overlap(a: SymmetricState, b: SymmetricState) -> complex:
    """<a|b> computed in the Dicke basis."""
    if a.n_parties != b.n_parties:
        raise ValueError(f"mismatched party numbers {a.n_parties} and {b.n_parties}")
    return complex(np.vdot(a.dicke, b.dicke))


def fidelity(a: SymmetricState, b: SymmetricState) -> float:
    """|<a|b>| / (|a| |b|)."""
    return abs(overlap(a, b)) / (a.norm() * b.norm())


def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    # adding 0.0 turns -0.0 into 0.0 so equal values serialize identically
    return [float(z.real) + 0.0, float(z.imag) + 0.0]


def complex_from_json(obj: Any) -> complex:
    if isinstance(obj, (int, float)):
        return complex(obj)
    if isinstance(obj, (list, tuple)) and len(obj) == 2 and all(isinstance(v, (int, float)) for v in obj):
        return complex(obj[0], obj[1])
    raise ValueError(f"expected a [re, im] pair, got {obj!r}")


def state_to_json(state: SymmetricState) -> dict[str, Any]:
    return {"n": state.n_parties, "dicke": [complex_to_json(v) for v in state.dicke]}


def state_from_json(obj: Any) -> SymmetricState:
    """Parse either the explicit ``dicke`` form or the ``name`` form."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise ValueError("state JSON must be an object")
    if "n" not in obj or not isinstance(obj["n"], int) or isinstance(obj["n"], bool):
        raise ValueError("state JSON needs an integer field 'n'")
    n = obj["n"]
    if "dicke" in obj:
        coeffs = obj["dicke"]
        if not isinstance(coeffs, list):
            raise ValueError("'dicke' must be a list of [re, im] pairs")
        return SymmetricState(n, [complex_from_json(c) for c in coeffs])
    if "name" in obj:
        z = obj.get("z")
        return build_named(str(obj["name"]), n, k=obj.get("k"), z=None if z is None else complex_from_json(z))
    raise ValueError("state JSON needs either 'dicke' or 'name'")
