"""Sharp constants for upper bounds on Weierstrass primary factors."""

from constants.models import ConstantMethod, ConstantResult, ExponentPair
from constants.sharp import (
    c_0_alpha,
    c_n_alpha,
    exponent_pair_for_p,
    g_seq,
    gamma_p,
    limit_constant,
    limit_root,
    log_r_alpha,
    r_alpha,
    ray_optimality_gap,
)

__all__ = [
    "ConstantMethod",
    "ConstantResult",
    "ExponentPair",
    "c_0_alpha",
    "c_n_alpha",
    "exponent_pair_for_p",
    "g_seq",
    "gamma_p",
    "limit_constant",
    "limit_root",
    "log_r_alpha",
    "r_alpha",
    "ray_optimality_gap",
]
