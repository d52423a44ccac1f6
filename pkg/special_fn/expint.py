"""Exponential integral Ei on the positive half-line."""
from __future__ import annotations

import math

from core.errors import DomainError

EULER_GAMMA = 0.57721566490153286061
MAX_TERMS = 2000


def expint_ei(x: float, terms: int | None = None) -> float:
    """
    Return Ei(x) = gamma + ln x + sum_{k>=1} x^k / (k * k!) for x > 0.

    With `terms` given, exactly that many series addends are used;
    otherwise the sum stops once addends fall below machine precision.
    """
    if not x > 0.0 or not math.isfinite(x):
        raise DomainError(f"expint_ei requires a finite x > 0, got {x!r}")

    limit = terms if terms is not None else MAX_TERMS
    power_over_factorial = 1.0
    total = 0.0
    for k in range(1, limit + 1):
        power_over_factorial *= x / k
        addend = power_over_factorial / k
        total += addend
        if terms is None and k > x and addend <= 1e-17 * total:
            break
    return EULER_GAMMA + math.log(x) + total
