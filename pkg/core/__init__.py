"""Shared building blocks for the Weierstrass bounds toolkit."""

from core.errors import (
    BracketError,
    ConvergenceError,
    DomainError,
    NonFiniteError,
    RangeError,
    SpectrumInputError,
    WeierstrassError,
)

__all__ = [
    "BracketError",
    "ConvergenceError",
    "DomainError",
    "NonFiniteError",
    "RangeError",
    "SpectrumInputError",
    "WeierstrassError",
]
