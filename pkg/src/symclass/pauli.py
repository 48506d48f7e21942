"""Weighted Pauli strings on qubit chains.

Site 0 is the most significant bit of a computational basis index. A term
is stored with its sites sorted and the identity factors dropped, and a sum
is kept in the canonical order (sites, then letters with X < Y < Z).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .symstate import complex_to_json

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
LETTERS = "IXYZ"

Key = tuple[tuple[int, ...], str]


@dataclass(frozen=True)
class PauliTerm:
    sites: tuple[int, ...]
    paulis: str
    coeff: complex

    def __post_init__(self) -> None:
        if len(self.sites) != len(self.paulis):
            raise ValueError("sites and paulis differ in length")
        if any(p not in "XYZ" for p in self.paulis):
            raise ValueError(f"paulis must use X, Y, Z only, got {self.paulis!r}")
        if len(set(self.sites)) != len(self.sites):
            raise ValueError(f"repeated site in {self.sites}")


def _canonical_key(sites: Iterable[int], paulis: str) -> Key:
    pairs = sorted((s, p) for s, p in zip(sites, paulis) if p != "I")
    return tuple(s for s, _ in pairs), "".join(p for _, p in pairs)


class PauliSum:
    """Immutable linear combination of Pauli strings on ``n_sites`` qubits."""

    __slots__ = ("n_sites", "_coeffs")

    def __init__(self, n_sites: int, coeffs: Mapping[Key, complex] | None = None):
        self.n_sites = int(n_sites)
        merged: dict[Key, complex] = {}
        for (sites, paulis), c in (coeffs or {}).items():
            key = _canonical_key(sites, paulis)
            if key[0] and (min(key[0]) < 0 or max(key[0]) >= self.n_sites):
                raise ValueError(f"site out of range in {key}")
            merged[key] = merged.get(key, 0j) + complex(c)
        self._coeffs = {k: merged[k] for k in sorted(merged) if merged[k] != 0}

    @classmethod
    def from_terms(cls, n_sites: int, terms: Iterable[PauliTerm | tuple]) -> "PauliSum":
        acc: dict[Key, complex] = {}
        for t in terms:
            sites, paulis, coeff = (t.sites, t.paulis, t.coeff) if isinstance(t, PauliTerm) else t
            key = _canonical_key(sites, paulis)
            acc[key] = acc.get(key, 0j) + complex(coeff)
        return cls(n_sites, acc)

    @classmethod
    def from_dense(cls, matrix: np.ndarray, chop: float = 1e-13) -> "PauliSum":
        """Expand a 2^n x 2^n matrix as sum_P Tr(P M) / 2^n P."""
        m = np.asarray(matrix, dtype=complex)
        n = int(round(np.log2(m.shape[0])))
        if m.shape != (2 ** n, 2 ** n):
            raise ValueError(f"expected a square 2^n matrix, got {m.shape}")
        t = m.reshape([2] * (2 * n))
        t = t.transpose([ax for s in range(n) for ax in (s, n + s)]).reshape([4] * n)
        # T[a, 2r + c] = sigma_a[c, r] / 2 so that contracting gives Tr(sigma_a M) / 2.
        basis = np.array([PAULI[p].T.reshape(4) / 2.0 for p in LETTERS])
        for s in range(n):
            t = np.moveaxis(np.tensordot(basis, t, axes=([1], [s])), 0, s)
        scale = np.abs(t).max() if t.size else 0.0
        coeffs: dict[Key, complex] = {}
        for idx in zip(*np.nonzero(np.abs(t) > chop * max(scale, 1.0))):
            word = "".join(LETTERS[a] for a in idx)
            c = complex(t[idx])
            c = complex(c.real if abs(c.real) > chop * max(scale, 1.0) else 0.0,
                        c.imag if abs(c.imag) > chop * max(scale, 1.0) else 0.0)
            coeffs[_canonical_key(range(n), word)] = c
        return cls(n, coeffs)

    def terms(self) -> tuple[PauliTerm, ...]:
        return tuple(PauliTerm(s, p, c) for (s, p), c in self._coeffs.items())

    def coefficients(self) -> dict[Key, complex]:
        return dict(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if other.n_sites != self.n_sites:
            raise ValueError("cannot add sums on different chains")
        acc = dict(self._coeffs)
        for k, c in other._coeffs.items():
            acc[k] = acc.get(k, 0j) + c
        return PauliSum(self.n_sites, acc)

    def scaled(self, factor: complex) -> "PauliSum":
        return PauliSum(self.n_sites, {k: factor * c for k, c in self._coeffs.items()})

    def placed(self, sites: tuple[int, ...], n_total: int) -> "PauliSum":
        """Relabel local site j as ``sites[j]`` on a chain of ``n_total``."""
        if len(sites) != self.n_sites:
            raise ValueError("one target site per local site is required")
        acc: dict[Key, complex] = {}
        for (ss, pp), c in self._coeffs.items():
            key = _canonical_key([sites[s] for s in ss], pp)
            acc[key] = acc.get(key, 0j) + c
        return PauliSum(n_total, acc)

    def is_hermitian(self, atol: float = 1e-12) -> bool:
        return all(abs(c.imag) <= atol for c in self._coeffs.values())

    def _masks(self, sites: tuple[int, ...], paulis: str) -> tuple[int, int, int]:
        xm = ym = zm = 0
        for s, p in zip(sites, paulis):
            bit = 1 << (self.n_sites - 1 - s)
            if p == "X":
                xm |= bit
            elif p == "Y":
                xm |= bit
                ym |= bit
            else:
                zm |= bit
        return xm, ym, zm

    def matvec(self, vec: np.ndarray) -> np.ndarray:
        v = np.asarray(vec, dtype=complex)
        if v.shape[0] != 2 ** self.n_sites:
            raise ValueError("vector length does not match the chain")
        idx = np.arange(2 ** self.n_sites, dtype=np.int64)
        out = np.zeros_like(v)
        for (sites, paulis), c in self._coeffs.items():
            xm, ym, zm = self._masks(sites, paulis)
            src = idx ^ xm
            sign = 1 - 2 * (_popcount(src & (ym | zm)) & 1)
            phase = c * (1j ** paulis.count("Y")) * sign
            out += (phase[:, None] * v[src]) if v.ndim == 2 else phase * v[src]
        return out

    def dense(self) -> np.ndarray:
        dim = 2 ** self.n_sites
        out = np.zeros((dim, dim), dtype=complex)
        cols = np.arange(dim, dtype=np.int64)
        for (sites, paulis), c in self._coeffs.items():
            xm, ym, zm = self._masks(sites, paulis)
            sign = 1 - 2 * (_popcount(cols & (ym | zm)) & 1)
            out[cols ^ xm, cols] += c * (1j ** paulis.count("Y")) * sign
        return out

    def to_json_terms(self) -> list[dict]:
        return [
            {"sites": list(s), "paulis": p, "coeff": complex_to_json(c)}
            for (s, p), c in self._coeffs.items()
        ]

    def __repr__(self) -> str:
        return f"PauliSum(n_sites={self.n_sites}, terms={len(self)})"


def _popcount(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    count = np.zeros_like(a)
    while np.any(a):
        count += a & 1
        a >>= 1
    return count


def heisenberg_bond(i: int, j: int, n: int, coeff: complex = 1.0) -> PauliSum:
    """coeff * sigma_i . sigma_j on a chain of n sites."""
    return PauliSum.from_terms(n, [((i, j), p + p, coeff) for p in "XYZ"])


def z_polynomial(coeffs: Mapping[frozenset, Fraction | float], n: int) -> PauliSum:
    return PauliSum.from_terms(n, [(tuple(sorted(s)), "Z" * len(s), float(c)) for s, c in coeffs.items()])


def dicke_projector_coefficients(n: int, k: int) -> dict[frozenset, Fraction]:
    """Exact Z-string expansion of prod_{l != k} (sum_i Z_i - n + 2l) / (2(l - k)).

    Products are reduced with Z_i^2 = 1, so each monomial is a set of sites.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    poly: dict[frozenset, Fraction] = {frozenset(): Fraction(1)}
    for level in range(n + 1):
        if level == k:
            continue
        denom = Fraction(2 * (level - k))
        factor = {frozenset(): Fraction(2 * level - n) / denom}
        for i in range(n):
            factor[frozenset([i])] = Fraction(1) / denom
        nxt: dict[frozenset, Fraction] = {}
        for s1, c1 in poly.items():
            for s2, c2 in factor.items():
                s = s1 ^ s2
                nxt[s] = nxt.get(s, Fraction(0)) + c1 * c2
        poly = {s: c for s, c in nxt.items() if c != 0}
    return poly
