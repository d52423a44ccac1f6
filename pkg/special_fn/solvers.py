"""Golden-section maximization and Brent-style root finding on a bracket."""
from __future__ import annotations

import logging
import math
import sys
from typing import Callable

from config import get_numerics
from core.errors import BracketError, ConvergenceError, DomainError, NonFiniteError
from special_fn.models import Bracket, SolverReport

logger = logging.getLogger(__name__)

EPS = sys.float_info.epsilon
# 1/phi, the golden-section shrink factor.
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
MAX_ITERATIONS = 500

RealFunction = Callable[[float], float]


def _checked(f: RealFunction, x: float) -> float:
    value = f(x)
    if not math.isfinite(value):
        raise NonFiniteError(x, value)
    return value


def _resolve_tolerance(tol: float | None) -> float:
    tol = get_numerics().solver_tolerance if tol is None else tol
    if not tol > 0:
        raise DomainError(f"Solver tolerance must be positive, got {tol!r}")
    return tol


def maximize_bracketed(f: RealFunction, bracket: Bracket, tol: float | None = None) -> SolverReport:
    """
    Locate a local maximizer of `f` on `bracket` by golden-section search.

    Only interior points are evaluated, so `f` may be singular at the
    bracket endpoints. If `f` is unimodal on the bracket, the result is its
    global maximum there.
    """
    tol = _resolve_tolerance(tol)
    a, b = bracket.lo, bracket.hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc = _checked(f, c)
    fd = _checked(f, d)

    iterations = 0
    while (b - a) > tol:
        if iterations >= MAX_ITERATIONS:
            raise ConvergenceError(
                f"Golden-section search stalled at width {b - a!r} after {iterations} iterations"
            )
        iterations += 1
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = _checked(f, c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = _checked(f, d)
        # Below this width the interior points coincide in floating point.
        if (b - a) <= 4.0 * EPS * max(abs(a), abs(b)):
            break

    if fc >= fd:
        best_x, best_value = c, fc
    else:
        best_x, best_value = d, fd
    logger.debug("golden section on [%r, %r]: %d iterations, argmax %r", bracket.lo, bracket.hi, iterations, best_x)
    return SolverReport(argument=best_x, value=best_value, iterations=iterations, width_at_stop=b - a)


def find_root_bracketed(f: RealFunction, bracket: Bracket, tol: float | None = None) -> float:
    """
    Return a root of `f` inside `bracket` (bisection with secant/inverse quadratic steps).

    Raises BracketError when f(lo) and f(hi) have the same sign.
    """
    tol = _resolve_tolerance(tol)
    x_pre, x_cur = bracket.lo, bracket.hi
    f_pre = _checked(f, x_pre)
    f_cur = _checked(f, x_cur)
    if f_pre == 0.0:
        return x_pre
    if f_cur == 0.0:
        return x_cur
    if f_pre * f_cur > 0.0:
        raise BracketError(bracket.lo, bracket.hi, f_pre, f_cur)

    x_blk, f_blk = 0.0, 0.0
    s_pre = s_cur = 0.0
    for iteration in range(MAX_ITERATIONS):
        if f_pre * f_cur < 0.0:
            x_blk, f_blk = x_pre, f_pre
            s_pre = s_cur = x_cur - x_pre
        if abs(f_blk) < abs(f_cur):
            x_pre, x_cur, x_blk = x_cur, x_blk, x_cur
            f_pre, f_cur, f_blk = f_cur, f_blk, f_cur

        # Stop once the sign-change interval is below tol.
        delta = 0.5 * max(tol, 2.0 * EPS * abs(x_cur))
        s_bis = 0.5 * (x_blk - x_cur)
        if f_cur == 0.0 or abs(s_bis) <= delta:
            logger.debug("root found at %r after %d iterations", x_cur, iteration)
            return x_cur

        if abs(s_pre) > delta and abs(f_cur) < abs(f_pre):
            if x_pre == x_blk:
                step = -f_cur * (x_cur - x_pre) / (f_cur - f_pre)
            else:
                d_pre = (f_pre - f_cur) / (x_pre - x_cur)
                d_blk = (f_blk - f_cur) / (x_blk - x_cur)
                step = -f_cur * (f_blk * d_blk - f_pre * d_pre) / (d_blk * d_pre * (f_blk - f_pre))
            if 2.0 * abs(step) < min(abs(s_pre), 3.0 * abs(s_bis) - delta):
                s_pre, s_cur = s_cur, step
            else:
                s_pre = s_cur = s_bis
        else:
            s_pre = s_cur = s_bis

        x_pre, f_pre = x_cur, f_cur
        if abs(s_cur) > delta:
            x_cur += s_cur
        else:
            x_cur += delta if s_bis > 0 else -delta
        f_cur = _checked(f, x_cur)

    raise ConvergenceError(f"Root search on [{bracket.lo!r}, {bracket.hi!r}] did not converge")
