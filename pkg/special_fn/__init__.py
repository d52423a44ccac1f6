"""Lambert W, exponential integral and bracketed one-dimensional solvers."""

from special_fn.expint import EULER_GAMMA, expint_ei
from special_fn.lambert import lambert_w0
from special_fn.models import Bracket, SolverReport
from special_fn.solvers import find_root_bracketed, maximize_bracketed

__all__ = [
    "Bracket",
    "EULER_GAMMA",
    "SolverReport",
    "expint_ei",
    "find_root_bracketed",
    "lambert_w0",
    "maximize_bracketed",
]
