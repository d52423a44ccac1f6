"""Determinant and eigenvalue-counting bounds evaluated on number sequences."""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Iterable, Union

from bounds.models import EigencountInput, SpectrumSample
from constants.sharp import gamma_p
from core.errors import DomainError, RangeError

LOG_FLOAT_MAX = math.log(sys.float_info.max)

SpectrumLike = Union[SpectrumSample, Iterable[float]]


@dataclass(frozen=True)
class DeterminantBound:
    """Bound exp(Gamma_p sum s^p) on |det_p(I - K)|, kept in log scale."""

    p: float
    gamma: float
    log_bound: float

    @property
    def overflows(self) -> bool:
        return self.log_bound > LOG_FLOAT_MAX

    @property
    def bound(self) -> float:
        """Linear-scale bound; RangeError when it is not representable."""
        if self.overflows:
            raise RangeError(f"exp({self.log_bound!r}) exceeds the floating-point range")
        return math.exp(self.log_bound)


def _as_sample(spectrum: SpectrumLike) -> SpectrumSample:
    if isinstance(spectrum, SpectrumSample):
        return spectrum
    return SpectrumSample.from_values(spectrum)


def det_bound(p: float, spectrum: SpectrumLike) -> DeterminantBound:
    """
    Bound |det_p(I - K)| <= exp(Gamma_p sum_n s_n^p).

    `spectrum` may hold singular numbers or eigenvalue moduli of K, in any order.
    """
    if not p > 0.0:
        raise DomainError(f"p must be positive, got {p!r}")
    sample = _as_sample(spectrum)
    gamma = gamma_p(p)
    return DeterminantBound(p=p, gamma=gamma, log_bound=gamma * sample.power_sum(p))


def eigencount_bound(data: EigencountInput) -> float:
    """
    Return Gamma_p R_p s / (s - ||A||)^(p+1) sum_n a_n^p, a bound on N_B(s).

    Combined in log scale; inf when the bound exceeds the floating-point range.
    """
    power_sum = data.approx_numbers.power_sum(data.p)
    if power_sum == 0.0:
        return 0.0
    log_bound = (
        math.log(gamma_p(data.p))
        + math.log(data.r_p)
        + math.log(data.s)
        - (data.p + 1.0) * math.log(data.s - data.norm_a)
        + math.log(power_sum)
    )
    if log_bound > LOG_FLOAT_MAX:
        return math.inf
    return math.exp(log_bound)
