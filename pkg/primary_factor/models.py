"""Domain types for primary factor evaluation."""
from __future__ import annotations

import cmath
import numbers
from dataclasses import dataclass
from typing import NamedTuple, Union

from core.errors import DomainError

# Points of the complex plane are plain Python complex numbers.
ComplexPoint = complex


@dataclass(frozen=True)
class FactorOrder:
    """Index n of the primary factor E_n."""

    n: int

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, numbers.Integral):
            raise DomainError(f"Factor order must be an integer, got {self.n!r}")
        if self.n < 0:
            raise DomainError(f"Factor order must be nonnegative, got {self.n!r}")


OrderLike = Union[int, FactorOrder]


class CircleMax(NamedTuple):
    """Maximum of ln|E_n| on a circle |z| = r and the angle where it is attained."""

    theta: float
    value: float


def as_order(n: OrderLike) -> int:
    """Validate a factor order and return it as int."""
    if isinstance(n, FactorOrder):
        return n.n
    return FactorOrder(n).n


def as_point(z: complex | float) -> complex:
    """Coerce to complex and reject non-finite coordinates."""
    point = complex(z)
    if not cmath.isfinite(point):
        raise DomainError(f"Complex point must have finite coordinates, got {z!r}")
    return point


def validate_exponent(n: int, alpha: float) -> None:
    """Check the admissible (n, alpha) range: [0,1] for n >= 1, (0,1] for n = 0."""
    lower_ok = alpha > 0.0 if n == 0 else alpha >= 0.0
    if not (lower_ok and alpha <= 1.0):
        interval = "(0, 1]" if n == 0 else "[0, 1]"
        raise DomainError(f"alpha must lie in {interval} for n={n}, got {alpha!r}")
