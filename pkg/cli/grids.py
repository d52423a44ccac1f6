"""`start:stop:step` grids and order lists accepted on the command line."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List

import click

from core.errors import DomainError

MAX_GRID_POINTS = 1_000_000
GRID_DECIMALS = 12


@dataclass(frozen=True)
class GridSpec:
    """Inclusive arithmetic grid start, start + step, ..., stop."""

    start: float
    stop: float
    step: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.start, self.stop, self.step)):
            raise DomainError("Grid bounds and step must be finite")
        if not self.step > 0.0:
            raise DomainError(f"Grid step must be positive, got {self.step!r}")
        if not self.start < self.stop:
            raise DomainError(f"Grid start must be below stop, got {self.start!r}:{self.stop!r}")
        if (self.stop - self.start) / self.step > MAX_GRID_POINTS:
            raise DomainError(f"Grid holds more than {MAX_GRID_POINTS} steps")

    def points(self) -> List[float]:
        # Rounding keeps decimal grids such as 0:1:0.01 free of 0.30000000000000004.
        count = math.floor((self.stop - self.start) / self.step + 1e-9)
        return [round(self.start + i * self.step, GRID_DECIMALS) for i in range(count + 1)]


def parse_grid(text: str) -> List[float]:
    """Parse `start:stop:step` or a single number into grid points."""
    parts = [part.strip() for part in text.split(":")]
    try:
        numbers = [float(part) for part in parts]
    except ValueError as exc:
        raise DomainError(f"Grid {text!r} is not of the form start:stop:step") from exc
    if len(numbers) == 1:
        if not math.isfinite(numbers[0]):
            raise DomainError(f"Grid point must be finite, got {text!r}")
        return numbers
    if len(numbers) != 3:
        raise DomainError(f"Grid {text!r} is not of the form start:stop:step")
    return GridSpec(*numbers).points()


def parse_orders(text: str) -> List[int]:
    """Parse `lo:hi` (inclusive) or a comma list of nonnegative orders."""
    try:
        if ":" in text:
            lo, hi = (int(part) for part in text.split(":"))
            orders = list(range(lo, hi + 1))
        else:
            orders = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise DomainError(f"Orders {text!r} must be lo:hi or a comma-separated list") from exc
    if not orders:
        raise DomainError(f"Orders {text!r} select nothing")
    if any(n < 0 for n in orders):
        raise DomainError(f"Orders must be nonnegative, got {text!r}")
    return orders


class GridParamType(click.ParamType):
    name = "grid"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            return parse_grid(str(value))
        except DomainError as exc:
            self.fail(str(exc), param, ctx)


class OrdersParamType(click.ParamType):
    name = "orders"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            return parse_orders(str(value))
        except DomainError as exc:
            self.fail(str(exc), param, ctx)


GRID = GridParamType()
ORDERS = OrdersParamType()
