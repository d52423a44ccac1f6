"""Shared exceptions for the numerical packages and the command line."""
from __future__ import annotations


class WeierstrassError(Exception):
    """Base class for every error raised by this toolkit."""


class DomainError(WeierstrassError, ValueError):
    """Raised when an argument lies outside the admissible set of an operation."""


class RangeError(WeierstrassError, OverflowError):
    """Raised when a result exceeds the representable floating-point range."""


class ConvergenceError(WeierstrassError, RuntimeError):
    """Raised when a search exhausts its bracket growth or iteration budget."""


class BracketError(WeierstrassError, ValueError):
    """Raised when a root bracket does not contain a sign change."""

    def __init__(self, lo: float, hi: float, f_lo: float, f_hi: float):
        super().__init__(f"No sign change on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}")
        self.lo = lo
        self.hi = hi
        self.f_lo = f_lo
        self.f_hi = f_hi


class NonFiniteError(WeierstrassError, ArithmeticError):
    """Raised when an objective returns NaN or infinity inside a solver bracket."""

    def __init__(self, x: float, value: float):
        super().__init__(f"Objective is not finite at x={x!r}: {value!r}")
        self.x = x
        self.value = value


class SpectrumInputError(WeierstrassError):
    """Raised when a spectrum file cannot be read or holds invalid entries."""

    exit_code = 3

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message)
        self.line_number = line_number
