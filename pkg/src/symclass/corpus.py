"""Seeded random test states.

All generators take an explicit ``numpy.random.Generator``; nothing here
draws from global state.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .numerics import min_separation, sqrt_binomials
from .symstate import SymmetricState, build_named, from_decomposition

MIN_SEPARATION = 0.2


@dataclass(frozen=True, eq=False)
class CorpusState:
    label: str
    state: SymmetricState
    planted_d: int | None = None


def random_points(rng: np.random.Generator, count: int, min_sep: float = MIN_SEPARATION) -> np.ndarray:
    """Unit points, uniform on the Bloch sphere, pairwise chordal distance > min_sep."""
    for _ in range(10_000):
        p = rng.standard_normal((count, 2)) + 1j * rng.standard_normal((count, 2))
        p /= np.linalg.norm(p, axis=1, keepdims=True)
        if count < 2 or min_separation(p) > min_sep:
            return p
    raise RuntimeError(f"could not place {count} points with separation {min_sep}")


def random_weights(rng: np.random.Generator, count: int) -> np.ndarray:
    """Moduli uniform in [0.5, 1] with uniform phases."""
    return rng.uniform(0.5, 1.0, size=count) * np.exp(2j * np.pi * rng.uniform(size=count))


def planted_state(rng: np.random.Generator, n: int, d: int) -> SymmetricState:
    """sum of d random tensor powers with well-separated points."""
    return from_decomposition(random_points(rng, d), random_weights(rng, d), n).normalize()


def haar_symmetric(rng: np.random.Generator, n: int) -> SymmetricState:
    d = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
    return SymmetricState(n, d / np.linalg.norm(d))


def named_states(n: int) -> list[CorpusState]:
    out = [
        CorpusState(f"separable0_{n}", build_named("separable0", n), 1),
        CorpusState(f"ghz_{n}", build_named("ghz", n), 2 if n >= 2 else 1),
        CorpusState(f"w_{n}", build_named("w", n), n if n >= 2 else 1),
    ]
    if n >= 4:
        out.append(CorpusState(f"x_{n}", build_named("x", n), n - 1))
    for k in range(2, n - 1):
        out.append(CorpusState(f"dicke{k}_{n}", build_named("dicke", n, k=k)))
    return out


def random_corpus(rng: np.random.Generator, n: int, count: int) -> list[CorpusState]:
    """Mixture of Haar-random symmetric states and planted low-rank states.

    Kinds cycle: Haar random, planted D <= floor(N/2)+1, planted D <= N+1.
    """
    out: list[CorpusState] = []
    for i in range(count):
        kind = i % 3
        if kind == 0:
            out.append(CorpusState(f"haar_{n}_{i}", haar_symmetric(rng, n)))
        else:
            top = n // 2 + 1 if kind == 1 else n + 1
            d = int(rng.integers(1, top + 1))
            out.append(CorpusState(f"planted{d}_{n}_{i}", planted_state(rng, n, d), d if d <= n // 2 + 1 else None))
    return out


@dataclass(frozen=True)
class RationalState:
    label: str
    moments: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.moments) - 1

    def state(self) -> SymmetricState:
        m = np.array([float(v) for v in self.moments])
        return SymmetricState(self.n, m * sqrt_binomials(self.n))


NODES = (Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))


def rational_corpus(rng: np.random.Generator, count: int, max_n: int = 6) -> list[RationalState]:
    """Exact moment vectors for N in 2..max_n.

    Kinds cycle: planted rational decompositions with up to three points (one
    of them possibly at infinity), sparse integer vectors, dense integers.
    """
    out: list[RationalState] = []
    i = 0
    while len(out) < count:
        n = int(rng.integers(2, max_n + 1))
        kind = i % 3
        if kind == 0:
            d = int(rng.integers(1, 4))
            with_inf = bool(rng.integers(0, 2))
            finite = d - 1 if with_inf else d
            nodes = [NODES[j] for j in rng.choice(len(NODES), size=finite, replace=False)]
            weights = [Fraction(int(v)) for v in rng.choice([-3, -2, -1, 1, 2, 3], size=finite)]
            b = [sum((w * z ** a for w, z in zip(weights, nodes)), Fraction(0)) for a in range(n + 1)]
            if with_inf:
                b[n] += Fraction(int(rng.choice([-2, -1, 1, 2])))
            label = f"planted{d}{'inf' if with_inf else ''}_{n}_{i}"
        elif kind == 1:
            b = [Fraction(0)] * (n + 1)
            for j in rng.choice(n + 1, size=int(rng.integers(1, 4)), replace=False):
                b[j] = Fraction(int(rng.choice([-2, -1, 1, 2])))
            label = f"sparse_{n}_{i}"
        else:
            b = [Fraction(int(v)) for v in rng.integers(-3, 4, size=n + 1)]
            label = f"dense_{n}_{i}"
        i += 1
        if any(v != 0 for v in b):
            out.append(RationalState(label, tuple(b)))
    return out
