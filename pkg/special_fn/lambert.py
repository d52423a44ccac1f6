"""Principal branch W0 of the Lambert function for real arguments."""
from __future__ import annotations

import logging
import math
import sys

from core.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

EPS = sys.float_info.epsilon
BRANCH_POINT = -math.exp(-1.0)
# Arguments this close below -1/e are rounding artefacts of -1/e itself.
BRANCH_SLACK = 4.0 * EPS
# Below this p the branch-point series alone is accurate to machine precision.
SERIES_ONLY_P = 5e-3
MAX_HALLEY_STEPS = 64

# W0(x) = -1 + p - p^2/3 + 11/72 p^3 - ... with p = sqrt(2(1 + e x)).
_BRANCH_SERIES = (
    -1.0,
    1.0,
    -1.0 / 3.0,
    11.0 / 72.0,
    -43.0 / 540.0,
    769.0 / 17280.0,
    -221.0 / 8505.0,
)


def _branch_series(p: float) -> float:
    result = 0.0
    for coefficient in reversed(_BRANCH_SERIES):
        result = result * p + coefficient
    return result


def _initial_guess(x: float) -> float:
    if x < -0.25:
        return _branch_series(math.sqrt(max(0.0, 2.0 * (math.e * x + 1.0))))
    if x < 3.0:
        return math.log1p(x) * (1.0 - math.log1p(math.log1p(x)) / (2.0 + math.log1p(x)))
    l1 = math.log(x)
    l2 = math.log(l1)
    return l1 - l2 + l2 / l1


def lambert_w0(x: float) -> float:
    """
    Return W0(x), the solution w >= -1 of w * exp(w) = x.

    Exact at the branch point (-1 at x = -1/e) and at the origin.
    Raises DomainError for x < -1/e.
    """
    if math.isnan(x):
        raise DomainError("lambert_w0 is undefined for NaN")
    if x < BRANCH_POINT - BRANCH_SLACK:
        raise DomainError(f"lambert_w0 requires x >= -1/e, got {x!r}")
    if x <= BRANCH_POINT:
        return -1.0
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf

    if x < -0.25:
        p = math.sqrt(max(0.0, 2.0 * (math.e * x + 1.0)))
        if p < SERIES_ONLY_P:
            return _branch_series(p)

    w = _initial_guess(x)
    for step in range(MAX_HALLEY_STEPS):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        denominator = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        if denominator == 0.0:
            return w
        delta = f / denominator
        w -= delta
        if abs(delta) <= 2.0 * EPS * (1.0 + abs(w)):
            logger.debug("lambert_w0(%r) converged in %d Halley steps", x, step + 1)
            return w
    raise ConvergenceError(f"Halley iteration for lambert_w0({x!r}) did not converge")
