"""Truncated tail series of ln|E_n(z)| inside the unit disk."""
from __future__ import annotations

import math

import numpy as np

from core.errors import DomainError
from oracle.models import SeriesEnclosure
from primary_factor.models import OrderLike, as_order, as_point


def series_log_abs_en(n: OrderLike, z: complex, terms: int) -> SeriesEnclosure:
    """
    Sum -sum_{k=n+1}^{n+terms} r^k cos(k theta)/k for |z| = r < 1.

    The omitted tail is bounded by the geometric majorant r^(K+1)/((K+1)(1-r))
    with K = n + terms.
    """
    n = as_order(n)
    z = as_point(z)
    if terms < 1:
        raise DomainError(f"terms must be positive, got {terms}")
    r = abs(z)
    if r >= 1.0:
        raise DomainError(f"series_log_abs_en requires |z| < 1, got |z| = {r!r}")
    if r == 0.0:
        return SeriesEnclosure(value=0.0, tail_bound=0.0)

    k = np.arange(n + 1, n + terms + 1, dtype=float)
    theta = math.atan2(z.imag, z.real)
    addends = -np.exp(k * math.log(r)) * np.cos(k * theta) / k
    last = n + terms
    tail_bound = math.exp((last + 1) * math.log(r)) / ((last + 1) * (1.0 - r))
    return SeriesEnclosure(value=math.fsum(addends), tail_bound=tail_bound)
