"""Numerical tolerances and size caps shared by every module."""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

MAX_FULL_ENV = "SYMCLASS_MAX_FULL"
DEFAULT_N_FULL_CAP = 14
HARD_N_FULL_CAP = 20


@dataclass(frozen=True)
class ToleranceConfig:
    """Thresholds used by the rank tests, root separation and certification.

    ``tol_rank`` is relative to the largest singular value. ``tol_sep`` is a
    chordal distance between unit-normalized projective points. ``max_cond``
    caps the condition number of the Dicke-space Vandermonde matrix that a
    decomposition is allowed to have before it is rejected as uncertifiable.
    """

    tol_rank: float = 1e-10
    tol_sep: float = 1e-8
    tol_resid: float = 1e-10
    tol_norm: float = 1e-12
    max_cond: float = 1e5
    kernel_samples: int = 8
    n_full_cap: int = DEFAULT_N_FULL_CAP
    n_spectral_cap: int = 10
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("tol_rank", "tol_sep", "tol_resid", "tol_norm"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise ValueError(f"{name} must lie in (0, 1), got {value}")
        if self.max_cond < 1.0:
            raise ValueError(f"max_cond must be >= 1, got {self.max_cond}")
        if self.kernel_samples < 0:
            raise ValueError("kernel_samples must be non-negative")
        if not 1 <= self.n_full_cap <= HARD_N_FULL_CAP:
            raise ValueError(f"n_full_cap must lie in [1, {HARD_N_FULL_CAP}], got {self.n_full_cap}")
        if self.n_spectral_cap < 1:
            raise ValueError("n_spectral_cap must be positive")

    def with_overrides(self, **kwargs) -> "ToleranceConfig":
        """Copy with the non-None keyword arguments applied."""
        known = {f.name for f in fields(self)}
        updates = {k: v for k, v in kwargs.items() if v is not None}
        unknown = set(updates) - known
        if unknown:
            raise TypeError(f"unknown tolerance fields: {sorted(unknown)}")
        return replace(self, **updates)

    @property
    def spectral_cap(self) -> int:
        return min(self.n_spectral_cap, self.n_full_cap)


def from_environment(base: ToleranceConfig | None = None) -> ToleranceConfig:
    """Apply the ``SYMCLASS_MAX_FULL`` override to a configuration."""
    base = base or ToleranceConfig()
    raw = os.environ.get(MAX_FULL_ENV)
    if raw is None or raw.strip() == "":
        return base
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MAX_FULL_ENV} must be an integer, got {raw!r}") from exc
    return base.with_overrides(n_full_cap=cap)


DEFAULT = ToleranceConfig()
