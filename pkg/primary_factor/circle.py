"""Maximum of ln|E_n| over a circle |z| = r."""
from __future__ import annotations

import cmath
import logging
import math

import numpy as np

from config import get_numerics
from core.errors import DomainError
from primary_factor.evaluation import log_abs_en, log_abs_en_array
from primary_factor.models import CircleMax, OrderLike, as_order
from special_fn.models import Bracket
from special_fn.solvers import maximize_bracketed

logger = logging.getLogger(__name__)

MIN_SAMPLES = 8


def _wrap_angle(theta: float) -> float:
    """Map an angle into (-pi, pi]."""
    wrapped = math.remainder(theta, 2.0 * math.pi)
    return math.pi if wrapped == -math.pi else wrapped


def circle_max(n: OrderLike, r: float, samples: int | None = None, *, tol: float | None = None) -> CircleMax:
    """
    Return the maximum of ln|E_n(r e^{i theta})| over theta.

    A uniform grid of `samples` angles (theta = 0 included) locates the best
    cell; golden-section search then refines within one cell on either side.
    """
    n = as_order(n)
    samples = get_numerics().circle_samples if samples is None else samples
    if not r > 0.0 or not math.isfinite(r):
        raise DomainError(f"circle_max requires a finite r > 0, got {r!r}")
    if samples < MIN_SAMPLES:
        raise DomainError(f"circle_max requires at least {MIN_SAMPLES} samples, got {samples}")

    step = 2.0 * math.pi / samples
    angles = step * np.arange(samples)
    values = log_abs_en_array(n, r * np.exp(1j * angles))
    best = int(np.argmax(values))
    best_theta = float(angles[best])
    best_value = float(values[best])

    report = maximize_bracketed(
        lambda theta: log_abs_en(n, cmath.rect(r, theta)),
        Bracket(best_theta - step, best_theta + step),
        tol,
    )
    if report.value > best_value:
        best_theta, best_value = report.argument, report.value
    logger.debug("circle_max(n=%d, r=%r): theta=%r value=%r", n, r, best_theta, best_value)
    return CircleMax(theta=_wrap_angle(best_theta), value=best_value)
