"""Value types shared by the bracketed solvers."""
from __future__ import annotations

import math
from dataclasses import dataclass

from core.errors import DomainError


@dataclass(frozen=True)
class Bracket:
    """Closed search interval [lo, hi] for a one-dimensional solver."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError(f"Bracket endpoints must be finite, got [{self.lo!r}, {self.hi!r}]")
        if not self.lo < self.hi:
            raise DomainError(f"Bracket requires lo < hi, got [{self.lo!r}, {self.hi!r}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)


@dataclass(frozen=True)
class SolverReport:
    """Outcome of a bracketed optimization."""

    argument: float  # location of the optimum
    value: float  # objective at `argument`
    iterations: int
    width_at_stop: float  # bracket width when the search stopped
