"""Registry of the verification suites exposed through `verify`."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from core.errors import DomainError, WeierstrassError
from verification import suites
from verification.models import Check, CheckResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteEntry:
    """Named group of checks with a short description for `verify --help`."""

    id: str
    description: str
    checks: Tuple[Check, ...]


def _entry(suite_id: str, description: str, *checks: Tuple[str, object]) -> SuiteEntry:
    return SuiteEntry(suite_id, description, tuple(Check(name, run) for name, run in checks))


_SUITES: Dict[str, SuiteEntry] = {
    entry.id: entry
    for entry in (
        _entry(
            "prop1",
            "maximum on the positive ray, inner monotonicity and limits of g",
            ("ray_maximality", suites.check_ray_maximality),
            ("inner_monotonicity", suites.check_inner_monotonicity),
            ("limsup_at_zero", suites.check_limsup_at_zero),
            ("growth_at_infinity", suites.check_growth_at_infinity),
        ),
        _entry(
            "thm1",
            "reference values, monotonicity in n and the large-order limit",
            ("golden_values", suites.check_golden_values),
            ("alpha_one_increasing_in_n", suites.check_alpha_one_increasing_in_n),
            ("alpha_zero_decreasing_in_n", suites.check_alpha_zero_decreasing_in_n),
            ("normalized_sequence", suites.check_normalized_sequence),
            ("limit_constant", suites.check_limit_constant),
            ("large_order_limit", suites.check_large_order_limit),
            ("normalized_upper_bounds", suites.check_normalized_upper_bounds),
        ),
        _entry(
            "thm2",
            "closed form for n = 0",
            ("closed_form_vs_maximization", suites.check_closed_form_vs_maximization),
            ("small_alpha_asymptotic", suites.check_small_alpha_asymptotic),
            ("r_alpha_interval", suites.check_r_alpha_interval),
            ("maximizing_radius", suites.check_maximizing_radius),
            ("zero_order_upper_bound", suites.check_zero_order_upper_bound),
            ("gamma_structure", suites.check_gamma_structure),
        ),
        _entry(
            "corollaries",
            "dependence on alpha and the derived chord bounds",
            ("monotone_in_alpha", suites.check_monotone_in_alpha),
            ("convex_in_alpha", suites.check_convex_in_alpha),
            ("chord_sandwich", suites.check_chord_sandwich),
            ("first_order_chord", suites.check_first_order_chord),
            ("higher_order_bound", suites.check_higher_order_bound),
        ),
        _entry(
            "oracle",
            "brute-force grid supremum and series enclosures",
            ("grid_sup_agreement", suites.check_grid_sup_agreement),
            ("grid_argmax_on_ray", suites.check_grid_argmax_on_ray),
            ("series_enclosures", suites.check_series_enclosures),
        ),
        _entry(
            "special",
            "Lambert W and exponential integral",
            ("lambert_round_trip", suites.check_lambert_round_trip),
            ("lambert_monotone", suites.check_lambert_monotone),
            ("exponential_integral", suites.check_exponential_integral),
        ),
        _entry(
            "stability",
            "agreement of the two evaluation branches",
            ("branch_agreement", suites.check_branch_agreement),
            ("exp_consistency", suites.check_exp_consistency),
        ),
    )
}


def list_suites() -> List[SuiteEntry]:
    return list(_SUITES.values())


def get_suite(suite_id: str) -> SuiteEntry:
    key = (suite_id or "").strip().lower()
    entry = _SUITES.get(key)
    if entry is None:
        raise DomainError(f"Unknown verification suite {suite_id!r}; choose from {', '.join(_SUITES)}")
    return entry


def run_suite(suite_id: str) -> List[CheckResult]:
    """Run every check of a suite; a check that raises counts as failed."""
    entry = get_suite(suite_id)
    results: List[CheckResult] = []
    for check in entry.checks:
        try:
            passed, detail = check.run()
        except (WeierstrassError, ArithmeticError, ValueError) as exc:
            logger.warning("Check %s/%s raised: %s", entry.id, check.name, exc)
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        logger.debug("Check %s/%s -> %s (%s)", entry.id, check.name, passed, detail)
        results.append(CheckResult(entry.id, check.name, bool(passed), detail))
    return results
