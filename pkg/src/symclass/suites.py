"""Property suites behind ``symclass verify`` and the acceptance tests."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .config import DEFAULT, ToleranceConfig
from .corpus import named_states, planted_state, random_corpus, rational_corpus
from .decomposer import IllConditionedError, decompose, extend_nesting, optimal_bond_dimension
from .hamiltonian import rank_profile
from .oracle import exact_bond_dimension
from .slocc import apply_ilo, ilo_to_json, random_ilo
from .symstate import build_named

SUITES = ("slocc", "nesting", "bounds", "oracle")
DEFAULT_COUNTS = {"slocc": 100, "nesting": 50, "bounds": 500, "oracle": 100}


@dataclass
class SuiteResult:
    suite: str
    seed: int
    count: int
    cases: int = 0
    passed: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    stats: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures and self.passed == self.cases

    def record(self, good: bool, failure: dict[str, Any] | None = None) -> None:
        self.cases += 1
        if good:
            self.passed += 1
        elif failure is not None:
            self.failures.append(failure)

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "count": self.count,
            "cases": self.cases,
            "passed": self.passed,
            "failed": self.cases - self.passed,
            "ok": self.ok,
            "stats": self.stats,
            "failures": self.failures,
        }


def _safe_d(state, tol: ToleranceConfig) -> int | None:
    try:
        return optimal_bond_dimension(state, tol)
    except IllConditionedError:
        return None


def slocc_suite(seed: int = 7, count: int = 100, tol: ToleranceConfig = DEFAULT, condition_cap: float = 50.0) -> SuiteResult:
    """Apply ``count`` random ILOs to each base state; a case is one ILO.

    Base states: GHZ_6, W_6, X_6 and ten planted D = 3 states at N = 8. An
    ILO passes when D is unchanged on every base state.
    """
    rng = np.random.default_rng(seed)
    base = [("ghz_6", build_named("ghz", 6), 2), ("w_6", build_named("w", 6), 6), ("x_6", build_named("x", 6), 5)]
    base += [(f"planted3_8_{i}", planted_state(rng, 8, 3), 3) for i in range(10)]
    result = SuiteResult("slocc", seed, count)
    for label, state, expected in base:
        got = _safe_d(state, tol)
        if got != expected:
            result.failures.append({"state": label, "ilo_index": None, "expected": expected, "got": got})
    checks = 0
    for t in range(count):
        op = random_ilo(rng, condition_cap)
        bad = []
        for label, state, expected in base:
            checks += 1
            got = _safe_d(apply_ilo(state, op), tol)
            if got != expected:
                bad.append({"state": label, "expected": expected, "got": got})
        result.record(
            not bad,
            {"seed": seed, "ilo_index": t, "ilo": ilo_to_json(op), "condition": op.condition_number(), "mismatches": bad},
        )
    result.stats = {"base_states": len(base), "checks": checks, "condition_cap": condition_cap}
    return result


def nesting_suite(seed: int = 3, count: int = 50, tol: ToleranceConfig = DEFAULT, ns: range = range(5, 11)) -> SuiteResult:
    """Planted states with D <= floor(N/2)+1 keep D when extended to N + 1."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("nesting", seed, count)
    skipped = 0
    for n in ns:
        for i in range(count):
            planted = int(rng.integers(1, n // 2 + 2))
            state = planted_state(rng, n, planted)
            try:
                dec = decompose(state, tol)
            except IllConditionedError:
                result.record(False, {"seed": seed, "n": n, "index": i, "planted": planted, "error": "ill-conditioned at N"})
                continue
            if dec.bond_dim > n // 2 + 1:
                skipped += 1
                continue
            after = _safe_d(extend_nesting(dec, 1), tol)
            result.record(
                after == dec.bond_dim,
                {"seed": seed, "n": n, "index": i, "planted": planted, "d_n": dec.bond_dim, "d_n_plus_1": after},
            )
    result.stats = {"n_values": list(ns), "hypothesis_not_met": skipped}
    return result


def bounds_suite(seed: int = 0, count: int = 500, tol: ToleranceConfig = DEFAULT, ns: range = range(4, 13)) -> SuiteResult:
    """n* <= floor(N/2)+1, rank symmetry and rank <= min(D, M+1) on a random corpus."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("bounds", seed, count)
    worst_n_star: dict[int, int] = {}
    for n in ns:
        corpus = named_states(n) + random_corpus(rng, n, count)
        for item in corpus:
            prof = rank_profile(item.state, tol)
            d = _safe_d(item.state, tol)
            problems = []
            if prof.n_star > n // 2 + 1:
                problems.append(f"n*={prof.n_star} exceeds floor(N/2)+1={n // 2 + 1}")
            for m in range(1, n):
                r = prof.rank(m)
                if r != prof.rank(n - m):
                    problems.append(f"rank rho^({m})={r} but rank rho^({n - m})={prof.rank(n - m)}")
                if d is None:
                    problems.append("solver could not certify D")
                    break
                if r > min(d, m + 1):
                    problems.append(f"rank rho^({m})={r} exceeds min(D={d}, M+1={m + 1})")
            worst_n_star[n] = max(worst_n_star.get(n, 0), prof.n_star)
            result.record(not problems, {"seed": seed, "n": n, "label": item.label, "problems": problems})
    result.stats = {"max_n_star": {str(k): v for k, v in worst_n_star.items()}}
    return result


def oracle_suite(seed: int = 0, count: int = 100, tol: ToleranceConfig = DEFAULT, max_d: int = 3) -> SuiteResult:
    """Floating-point D against the exact Groebner decision on rational states."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("oracle", seed, count)
    histogram: dict[str, int] = {}
    for item in rational_corpus(rng, count):
        exact = exact_bond_dimension(item.moments, max_d)
        got = _safe_d(item.state(), tol)
        agree = got is not None and (got == exact if exact is not None else got > max_d)
        key = str(exact) if exact is not None else f">{max_d}"
        histogram[key] = histogram.get(key, 0) + 1
        result.record(
            agree,
            {"seed": seed, "label": item.label, "moments": [str(v) for v in item.moments], "exact": key, "solver": got},
        )
    result.stats = {"exact_histogram": dict(sorted(histogram.items())), "max_d": max_d}
    return result


RUNNERS: dict[str, Callable[..., SuiteResult]] = {
    "slocc": slocc_suite,
    "nesting": nesting_suite,
    "bounds": bounds_suite,
    "oracle": oracle_suite,
}


def run_suite(name: str, seed: int | None = None, count: int | None = None, tol: ToleranceConfig = DEFAULT) -> SuiteResult:
    """Run a suite; a missing seed or count falls back to the suite's default."""
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    if count is not None and count < 1:
        raise ValueError(f"count must be positive, got {count}")
    kwargs = {"count": DEFAULT_COUNTS[name] if count is None else count, "tol": tol}
    if seed is not None:
        kwargs["seed"] = seed
    return RUNNERS[name](**kwargs)
