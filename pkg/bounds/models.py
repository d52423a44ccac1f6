"""Input types for the spectral bound evaluators."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from core.errors import DomainError


@dataclass(frozen=True)
class SpectrumSample:
    """
    Finite nonincreasing sequence of nonnegative reals.

    Stands in for singular numbers, eigenvalue moduli or approximation
    numbers; only its power sums enter the bounds.
    """

    values: Tuple[float, ...]

    def __post_init__(self) -> None:
        for value in self.values:
            if not (math.isfinite(value) and value >= 0.0):
                raise DomainError(f"Spectrum entries must be finite and nonnegative, got {value!r}")
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise DomainError("Spectrum entries must be sorted nonincreasingly")

    @classmethod
    def from_values(cls, values: Iterable[float]) -> "SpectrumSample":
        """Build a sample from entries in any order."""
        return cls(tuple(sorted((float(v) for v in values), reverse=True)))

    def __len__(self) -> int:
        return len(self.values)

    def concat(self, other: "SpectrumSample") -> "SpectrumSample":
        return SpectrumSample.from_values(self.values + other.values)

    def power_sum(self, p: float) -> float:
        """Return sum_k values_k^p."""
        if not self.values:
            return 0.0
        return math.fsum(np.power(np.asarray(self.values, dtype=float), p))


@dataclass(frozen=True)
class EigencountInput:
    """Data of the eigenvalue counting bound for B = A + K outside the disk of radius s."""

    p: float
    r_p: float  # constant R_p, supplied by the caller
    norm_a: float  # operator norm of A
    s: float
    approx_numbers: SpectrumSample

    def __post_init__(self) -> None:
        if not self.p > 0.0:
            raise DomainError(f"p must be positive, got {self.p!r}")
        for name in ("p", "r_p", "norm_a", "s"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite, got {getattr(self, name)!r}")
        if not self.r_p > 0.0:
            raise DomainError(f"R_p must be positive, got {self.r_p!r}")
        if not self.norm_a >= 0.0:
            raise DomainError(f"||A|| must be nonnegative, got {self.norm_a!r}")
        if not self.s > self.norm_a:
            raise DomainError(f"s must exceed ||A|| = {self.norm_a!r}, got {self.s!r}")
