"""Brute-force polar grid supremum of g(z) = ln|E_n(z)| / |z|^(n+alpha)."""
from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from config import get_numerics
from core.errors import DomainError
from oracle.models import GridSupResult, GridSupSpec
from primary_factor.evaluation import log_abs_en_array
from primary_factor.models import as_order, validate_exponent
from special_fn.models import Bracket, SolverReport
from special_fn.solvers import maximize_bracketed

logger = logging.getLogger(__name__)

# Points this close to z = 0 or z = 1 are left out of the grid.
EXCLUSION_RADIUS = 1e-9
# Roughly this many grid points are evaluated per chunk of radii.
POINTS_PER_CHUNK = 1 << 18

ChunkBest = Tuple[float, int, int]


def default_grid_spec(n: int) -> GridSupSpec:
    """Grid reaching r_max = factor * (1 + 1/n) at the configured resolution."""
    numerics = get_numerics()
    return GridSupSpec(
        r_max=numerics.oracle_r_max_factor * (1.0 + 1.0 / n),
        radial_steps=numerics.oracle_radial_steps,
        angular_steps=numerics.oracle_angular_steps,
    )


def _chunk_best(
    n: int, exponent: float, radii: np.ndarray, angles: np.ndarray, row_offset: int
) -> ChunkBest:
    z = radii[:, None] * np.exp(1j * angles)[None, :]
    values = log_abs_en_array(n, z, scale_exponent=exponent)
    excluded = (np.abs(z) < EXCLUSION_RADIUS) | (np.abs(z - 1.0) < EXCLUSION_RADIUS)
    values[excluded | np.isnan(values)] = -np.inf
    flat = int(np.argmax(values))
    row, col = divmod(flat, values.shape[1])
    return float(values[row, col]), row_offset + row, col


def grid_sup(n: int, alpha: float, spec: Optional[GridSupSpec] = None) -> GridSupResult:
    """
    Return the largest value of g over the polar grid `spec`.

    Since every grid point is admissible, the result is a lower bound for
    C_{n,alpha}. Rows of radii are evaluated in chunks (optionally on a
    thread pool); chunk maxima are combined in grid order, so ties resolve
    to the smallest radius and angle.
    """
    n = as_order(n)
    if n < 1:
        raise DomainError(f"grid_sup requires n >= 1, got {n}")
    validate_exponent(n, alpha)
    spec = spec or default_grid_spec(n)
    if spec.r_max < 1.0 + 1.0 / n:
        raise DomainError(f"r_max must be at least 1 + 1/n = {1.0 + 1.0 / n!r}, got {spec.r_max!r}")

    numerics = get_numerics()
    r_min = min(numerics.oracle_r_min, spec.r_max)
    radii = np.geomspace(r_min, spec.r_max, spec.radial_steps)
    angles = 2.0 * math.pi * np.arange(spec.angular_steps) / spec.angular_steps
    rows_per_chunk = max(1, POINTS_PER_CHUNK // spec.angular_steps)
    starts = list(range(0, spec.radial_steps, rows_per_chunk))
    exponent = n + alpha

    def run(start: int) -> ChunkBest:
        return _chunk_best(n, exponent, radii[start : start + rows_per_chunk], angles, start)

    if numerics.workers > 1:
        with ThreadPoolExecutor(max_workers=numerics.workers) as executor:
            results: List[ChunkBest] = list(executor.map(run, starts))
    else:
        results = [run(start) for start in starts]

    value, row, col = max(results, key=lambda item: (item[0], -item[1], -item[2]))
    logger.debug("grid_sup(n=%d, alpha=%r): %r at r=%r theta=%r", n, alpha, value, radii[row], angles[col])
    return GridSupResult(value=value, radius=float(radii[row]), angle=float(angles[col]))


def _softplus(t: float) -> float:
    """ln(1 + e^t) without overflow."""
    return max(t, 0.0) + math.log1p(math.exp(-abs(t)))


def zero_order_sup(alpha: float, tol: float | None = None) -> SolverReport:
    """
    Maximize ln(1+r)/r^alpha over r > 0 by golden-section search in t = ln r.

    The returned `argument` is ln r. Serves as an independent check of the
    closed form for C_{0,alpha}.
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")
    # The maximizer satisfies ln R < 1/alpha; the left end covers alpha close to 1.
    bracket = Bracket(-40.0, 1.0 / alpha + 5.0)
    return maximize_bracketed(lambda t: _softplus(t) * math.exp(-alpha * t), bracket, tol)
