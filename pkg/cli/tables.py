"""Deterministic CSV emission and the figure table rows."""
from __future__ import annotations

import csv
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence, TextIO, TypeVar

from bounds.analytic import c0_upper
from config import get_numerics
from constants.sharp import c_0_alpha, c_n_alpha, gamma_p, r_alpha

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

Row = Sequence[float]


def format_number(value: float, digits: int | None = None) -> str:
    digits = get_numerics().significant_digits if digits is None else digits
    return f"{value:.{digits}g}"


def write_table(stream: TextIO, columns: Sequence[str], rows: Iterable[Row]) -> int:
    """Write `# columns: ...` and one CSV line per row; return the row count."""
    stream.write("# columns: " + ",".join(columns) + "\n")
    writer = csv.writer(stream, lineterminator="\n")
    count = 0
    for row in rows:
        writer.writerow(format_number(value) if isinstance(value, float) else value for value in row)
        count += 1
    return count


def ordered_map(fn: Callable[[T], R], items: Sequence[T], workers: int | None = None) -> List[R]:
    """Evaluate fn over items, concurrently when workers > 1, keeping input order."""
    workers = get_numerics().workers if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    logger.debug("Sweeping %d points on %d workers", len(items), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def gamma_rows(p_grid: Sequence[float]) -> List[Row]:
    return ordered_map(lambda p: (p, gamma_p(p)), p_grid)


def constant_rows(orders: Sequence[int], alpha_grid: Sequence[float]) -> List[Row]:
    pairs = [(n, alpha) for n in orders for alpha in alpha_grid]
    return ordered_map(lambda pair: (pair[0], pair[1], c_n_alpha(*pair).value), pairs)


def _zero_order_row(alpha: float) -> Row:
    radius = 1.0 if alpha == 1.0 else r_alpha(alpha)
    return (alpha, c_0_alpha(alpha).value, radius, c0_upper(alpha))


def zero_order_rows(alpha_grid: Sequence[float]) -> List[Row]:
    return ordered_map(_zero_order_row, alpha_grid)
