"""Independent brute-force validators for the fast evaluation paths."""

from oracle.grid import default_grid_spec, grid_sup, zero_order_sup
from oracle.models import GridSupResult, GridSupSpec, SeriesEnclosure
from oracle.series import series_log_abs_en

__all__ = [
    "GridSupResult",
    "GridSupSpec",
    "SeriesEnclosure",
    "default_grid_spec",
    "grid_sup",
    "series_log_abs_en",
    "zero_order_sup",
]
