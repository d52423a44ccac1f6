"""Domain types for the sharp growth constants C_{n,alpha}."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from primary_factor.models import as_order, validate_exponent

ConstantMethod = Literal["ray_maximization", "closed_form", "limit_definition"]


@dataclass(frozen=True)
class ExponentPair:
    """Primary factor order n with the extra exponent alpha; the bound grows like |z|^(n+alpha)."""

    n: int
    alpha: float

    def __post_init__(self) -> None:
        as_order(self.n)
        validate_exponent(self.n, self.alpha)

    @property
    def exponent(self) -> float:
        return self.n + self.alpha


@dataclass(frozen=True)
class ConstantResult:
    """A computed constant together with where and how it was obtained."""

    value: float
    maximizing_radius: float  # 0 when the supremum is only approached as r -> 0; inf when not representable
    method: ConstantMethod
    residual: float  # first-order optimality gap at maximizing_radius

    def __post_init__(self) -> None:
        if not (self.value > 0.0 and math.isfinite(self.value)):
            raise ValueError(f"Constant must be positive and finite, got {self.value!r}")
