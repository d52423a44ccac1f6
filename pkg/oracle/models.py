"""Types returned by the brute-force validators."""
from __future__ import annotations

import math
from dataclasses import dataclass

from core.errors import DomainError


@dataclass(frozen=True)
class GridSupSpec:
    """Polar grid: log-spaced radii up to r_max, uniform angles starting at 0."""

    r_max: float
    radial_steps: int
    angular_steps: int

    def __post_init__(self) -> None:
        if not (self.r_max > 0.0 and math.isfinite(self.r_max)):
            raise DomainError(f"r_max must be finite and positive, got {self.r_max!r}")
        if self.radial_steps < 1 or self.angular_steps < 1:
            raise DomainError("Grid step counts must be positive")

    def refined(self) -> "GridSupSpec":
        """Grid with twice the resolution that contains every point of this one."""
        return GridSupSpec(self.r_max, 2 * self.radial_steps - 1, 2 * self.angular_steps)


@dataclass(frozen=True)
class GridSupResult:
    """Largest sampled value of g and the polar point where it occurred."""

    value: float
    radius: float
    angle: float  # in [0, 2 pi)


@dataclass(frozen=True)
class SeriesEnclosure:
    """Truncated tail series with a rigorous bound on the omitted addends."""

    value: float
    tail_bound: float

    @property
    def lower(self) -> float:
        return self.value - self.tail_bound

    @property
    def upper(self) -> float:
        return self.value + self.tail_bound

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lower - slack <= x <= self.upper + slack
