"""Closed-form upper bounds on C_{n,alpha} and g_n."""
from __future__ import annotations

import math
import numbers

from constants.sharp import c_n_alpha, limit_constant
from core.errors import DomainError
from special_fn.lambert import lambert_w0


def _require_order(n: int, minimum: int) -> None:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < minimum:
        raise DomainError(f"n must be an integer >= {minimum}, got {n!r}")


def _require_unit_alpha(alpha: float) -> None:
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha!r}")


def convexity_upper(n: int, alpha: float) -> float:
    """(1 - alpha) C_{n,0} + alpha C_{n,1}: the chord above the convex map alpha -> C_{n,alpha}."""
    _require_order(n, 1)
    _require_unit_alpha(alpha)
    return (1.0 - alpha) * c_n_alpha(n, 0.0).value + alpha * c_n_alpha(n, 1.0).value


def c1_upper(alpha: float) -> float:
    """(1 - alpha)(1 + W(1/e)) + alpha/2, the chord bound for n = 1."""
    _require_unit_alpha(alpha)
    return (1.0 - alpha) * (1.0 + lambert_w0(math.exp(-1.0))) + alpha / 2.0


def cn_upper(n: int, alpha: float) -> float:
    """1 - alpha (1 - min(1/x0, n/(n+1))) for n >= 2; never exceeds 1."""
    _require_order(n, 2)
    _require_unit_alpha(alpha)
    return 1.0 - alpha * (1.0 - min(limit_constant(), n / (n + 1)))


def c0_upper(alpha: float) -> float:
    """(1/alpha - 1)^(1 - alpha) for alpha in (0, 1]; 1 at alpha = 1."""
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")
    if alpha == 1.0:
        return 1.0
    return (1.0 / alpha - 1.0) ** (1.0 - alpha)


def marchetti_h(n: int) -> float:
    """
    Upper bound h_n on g_n:

    exp(-(n-1)/(4(n+1)) / {1 + (1 + 2/(1 + cosec(pi/(n+1))))^n}).
    """
    _require_order(n, 1)
    cosec = 1.0 / math.sin(math.pi / (n + 1))
    # n log(1 + 2/(1 + cosec)) stays below 2 pi for every n.
    power = math.exp(n * math.log1p(2.0 / (1.0 + cosec)))
    return math.exp(-(n - 1) / (4.0 * (n + 1)) / (1.0 + power))


def blumenthal_upper(n: int) -> float:
    """n/(n+1), the classical bound C_{n,1} <= n/(n+1) (equivalently g_n <= 1)."""
    _require_order(n, 1)
    return n / (n + 1)


def classical_upper(n: int) -> float:
    """3e(2 + ln n), the weak textbook bound on C_{n,1}."""
    _require_order(n, 1)
    return 3.0 * math.e * (2.0 + math.log(n))
