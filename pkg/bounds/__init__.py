"""Analytic upper bounds and their spectral-theory applications."""

from bounds.analytic import (
    blumenthal_upper,
    c0_upper,
    c1_upper,
    classical_upper,
    cn_upper,
    convexity_upper,
    marchetti_h,
)
from bounds.models import EigencountInput, SpectrumSample
from bounds.spectral import DeterminantBound, det_bound, eigencount_bound

__all__ = [
    "DeterminantBound",
    "EigencountInput",
    "SpectrumSample",
    "blumenthal_upper",
    "c0_upper",
    "c1_upper",
    "classical_upper",
    "cn_upper",
    "convexity_upper",
    "det_bound",
    "eigencount_bound",
    "marchetti_h",
]
