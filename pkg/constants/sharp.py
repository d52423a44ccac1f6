"""Sharp constants C_{n,alpha}, the limit 1/x0, Gamma_p and the sequence g_n."""
from __future__ import annotations

import logging
import math
import numbers
from functools import lru_cache

import numpy as np

from config import get_numerics
from constants.models import ConstantResult, ExponentPair
from core.errors import BracketError, ConvergenceError, DomainError
from primary_factor.evaluation import ray_ratio, ray_ratio_array
from special_fn.expint import expint_ei
from special_fn.lambert import lambert_w0
from special_fn.models import Bracket
from special_fn.solvers import find_root_bracketed, maximize_bracketed

logger = logging.getLogger(__name__)

# Bracket for x0, the positive zero of e^x/x - Ei(x).
LIMIT_ROOT_BRACKET = Bracket(0.5, 3.0)


def ray_optimality_gap(n: int, alpha: float, r: float) -> float:
    """
    Return r f'(r) / (n+alpha) for f(r) = ln|E_n(r)| / r^(n+alpha), r > 1.

    Uses d/dr [ln(r-1) + sum_{k<=n} r^k/k] = r^n / (r-1), so that
    r f'(r) = r^(1-alpha) / (r-1) - (n+alpha) f(r). Zero at an interior maximizer.
    """
    exponent = n + alpha
    return (r ** (1.0 - alpha) / (r - 1.0) - exponent * ray_ratio(n, alpha, r)) / exponent


@lru_cache(maxsize=8192)
def _ray_maximum(
    n: int,
    alpha: float,
    tol: float,
    scan_points: int,
    max_doublings: int,
    residual_tolerance: float,
) -> ConstantResult:
    lo = 1.0 + 1.0 / n
    hi = max(4.0, 2.0 * lo)
    for doubling in range(max_doublings + 1):
        radii = np.linspace(lo, hi, scan_points)
        values = ray_ratio_array(n, alpha, radii)
        best = int(np.argmax(values))
        if best < scan_points - 1:
            break
        logger.debug("C_{%d,%r}: scan maximum at right end %r, doubling (%d)", n, alpha, hi, doubling + 1)
        hi *= 2.0
    else:
        raise ConvergenceError(
            f"No interior maximum for n={n}, alpha={alpha!r} after {max_doublings} bracket doublings"
        )

    left = float(radii[max(best - 1, 0)])
    right = float(radii[min(best + 1, scan_points - 1)])
    report = maximize_bracketed(lambda r: ray_ratio(n, alpha, r), Bracket(left, right), tol)
    radius, value = report.argument, report.value
    if best == 0 and ray_ratio(n, alpha, lo) >= value:
        radius, value = lo, ray_ratio(n, alpha, lo)

    gap = ray_optimality_gap(n, alpha, radius)
    at_lower_end = radius - lo <= 2.0 * tol
    # At the lower end of r >= 1 + 1/n only an increasing direction violates optimality.
    residual = max(gap, 0.0) if at_lower_end else abs(gap)
    if residual > residual_tolerance:
        logger.warning(
            "C_{%d,%r}: optimality gap %.3e at r=%r exceeds tolerance %.1e",
            n,
            alpha,
            residual,
            radius,
            residual_tolerance,
        )
    return ConstantResult(value=value, maximizing_radius=radius, method="ray_maximization", residual=residual)


def c_n_alpha(n: int, alpha: float) -> ConstantResult:
    """
    Return C_{n,alpha}, the least C with |E_n(z)| <= exp(C |z|^(n+alpha)) on the plane.

    For n >= 1 the supremum is attained on the ray r >= 1 + 1/n and found by a
    coarse scan with adaptive right-end growth, then golden-section search.
    n = 0 uses the closed form.
    """
    pair = ExponentPair(n, alpha)
    if pair.n == 0:
        return c_0_alpha(pair.alpha)
    numerics = get_numerics()
    if pair.n > numerics.max_order:
        logger.info(
            "C_{%d,%r}: order above %d, value approaches 1/x0 = %.6f",
            pair.n,
            pair.alpha,
            numerics.max_order,
            limit_constant(),
        )
    return _ray_maximum(
        int(pair.n),
        float(pair.alpha),
        numerics.solver_tolerance,
        numerics.scan_points,
        numerics.max_bracket_doublings,
        numerics.residual_tolerance,
    )


def _lambert_argument(alpha: float) -> float:
    return lambert_w0(-(1.0 / alpha) * math.exp(-1.0 / alpha))


def log_r_alpha(alpha: float) -> float:
    """Return ln r_alpha, finite for every 0 < alpha < 1."""
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"r_alpha requires 0 < alpha < 1, got {alpha!r}")
    # r = -alpha w = exp(-1/alpha - w) since w e^w = -(1/alpha) e^(-1/alpha).
    return -1.0 / alpha - _lambert_argument(alpha)


def r_alpha(alpha: float) -> float:
    """
    Return r_alpha = -alpha W(-(1/alpha) e^(-1/alpha)), which lies in (0, alpha).

    Below alpha of about 0.0014 the value underflows to 0.0; use log_r_alpha there.
    """
    return math.exp(log_r_alpha(alpha))


def c_0_alpha(alpha: float) -> ConstantResult:
    """
    Return C_{0,alpha} = max_{r>=0} ln(1+r)/r^alpha.

    alpha = 1 gives 1, approached only as r -> 0. For alpha < 1 the value is
    (1/alpha) r^alpha (1-r)^(1-alpha) at r = r_alpha, attained at
    R = e^(W + 1/alpha) - 1 (reported as inf once it overflows).
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"C_(0,alpha) requires 0 < alpha <= 1, got {alpha!r}")
    if alpha == 1.0:
        return ConstantResult(value=1.0, maximizing_radius=0.0, method="limit_definition", residual=0.0)

    w = _lambert_argument(alpha)
    log_r = -1.0 / alpha - w
    r = math.exp(log_r)
    value = math.exp(-math.log(alpha) + alpha * log_r + (1.0 - alpha) * math.log1p(-r))
    try:
        radius = math.expm1(w + 1.0 / alpha)
    except OverflowError:
        radius = math.inf
    # r_alpha solves alpha ln r + 1 - r = 0.
    residual = abs(alpha * log_r + 1.0 - r)
    return ConstantResult(value=value, maximizing_radius=radius, method="closed_form", residual=residual)


def _limit_function(x: float) -> float:
    return math.exp(x) / x - expint_ei(x)


@lru_cache(maxsize=1)
def limit_root() -> float:
    """Return x0, the unique positive zero of e^x/x - Ei(x)."""
    bracket = LIMIT_ROOT_BRACKET
    f_lo, f_hi = _limit_function(bracket.lo), _limit_function(bracket.hi)
    if f_lo * f_hi >= 0.0:
        raise ConvergenceError(str(BracketError(bracket.lo, bracket.hi, f_lo, f_hi)))
    return find_root_bracketed(_limit_function, bracket)


def limit_constant() -> float:
    """Return 1/x0 (about 0.7423), the common limit of C_{n,alpha} as n grows."""
    return 1.0 / limit_root()


def exponent_pair_for_p(p: float) -> ExponentPair:
    """Split p > 0 into (n, alpha) = (ceil(p) - 1, p + 1 - ceil(p))."""
    if not p > 0.0 or not math.isfinite(p):
        raise DomainError(f"Gamma_p requires a finite p > 0, got {p!r}")
    m = math.ceil(p)
    return ExponentPair(m - 1, p + 1.0 - m)


def gamma_p(p: float) -> float:
    """Return Gamma_p = C_{ceil(p)-1, p+1-ceil(p)}."""
    pair = exponent_pair_for_p(p)
    return c_n_alpha(pair.n, pair.alpha).value


def g_seq(n: int) -> float:
    """Return g_n = (n+1)/n * C_{n,1}."""
    if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < 1:
        raise DomainError(f"g_n requires an integer n >= 1, got {n!r}")
    return (n + 1) / n * c_n_alpha(n, 1.0).value
