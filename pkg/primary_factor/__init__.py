"""Numerically stable evaluation of Weierstrass primary factors E_n."""

from primary_factor.circle import circle_max
from primary_factor.evaluation import (
    eval_en,
    g_value,
    limsup_at_infinity,
    limsup_at_zero,
    log_abs_en,
    log_abs_en_array,
    log_abs_en_ray,
    ray_ratio,
    ray_ratio_array,
)
from primary_factor.models import CircleMax, ComplexPoint, FactorOrder, validate_exponent

__all__ = [
    "CircleMax",
    "ComplexPoint",
    "FactorOrder",
    "circle_max",
    "eval_en",
    "g_value",
    "limsup_at_infinity",
    "limsup_at_zero",
    "log_abs_en",
    "log_abs_en_array",
    "log_abs_en_ray",
    "ray_ratio",
    "ray_ratio_array",
    "validate_exponent",
]
