"""Default configuration for the Weierstrass bounds toolkit."""
from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Any, Dict, Optional

# Application identity
APP_NAME = "Weierstrass Bounds"
APP_VERSION = "0.1.0"

# Series/direct switchover radius for ln|E_n(z)|.
DEFAULT_SERIES_THRESHOLD = 0.5
# Geometric tail bound at which the series is truncated.
DEFAULT_SERIES_TOLERANCE = 1e-17
DEFAULT_SOLVER_TOLERANCE = 1e-12
DEFAULT_RESIDUAL_TOLERANCE = 1e-6
DEFAULT_CIRCLE_SAMPLES = 720
DEFAULT_SCAN_POINTS = 64
DEFAULT_MAX_BRACKET_DOUBLINGS = 60
# Orders beyond this still evaluate; they are logged as near the limit 1/x0.
DEFAULT_MAX_ORDER = 500

# Brute-force grid oracle
DEFAULT_ORACLE_RADIAL_STEPS = 4000
DEFAULT_ORACLE_ANGULAR_STEPS = 720
DEFAULT_ORACLE_R_MIN = 0.01
DEFAULT_ORACLE_R_MAX_FACTOR = 10.0

# Table output
DEFAULT_SIGNIFICANT_DIGITS = 12
DEFAULT_WORKERS = 1
DEFAULT_LOG_LEVEL = "WARNING"


@dataclass(frozen=True)
class NumericsConfig:
    """Tunable constants shared by the numerical packages."""

    series_threshold: float = DEFAULT_SERIES_THRESHOLD
    series_tolerance: float = DEFAULT_SERIES_TOLERANCE
    solver_tolerance: float = DEFAULT_SOLVER_TOLERANCE
    residual_tolerance: float = DEFAULT_RESIDUAL_TOLERANCE
    circle_samples: int = DEFAULT_CIRCLE_SAMPLES
    scan_points: int = DEFAULT_SCAN_POINTS
    max_bracket_doublings: int = DEFAULT_MAX_BRACKET_DOUBLINGS
    max_order: int = DEFAULT_MAX_ORDER
    oracle_radial_steps: int = DEFAULT_ORACLE_RADIAL_STEPS
    oracle_angular_steps: int = DEFAULT_ORACLE_ANGULAR_STEPS
    oracle_r_min: float = DEFAULT_ORACLE_R_MIN
    oracle_r_max_factor: float = DEFAULT_ORACLE_R_MAX_FACTOR
    significant_digits: int = DEFAULT_SIGNIFICANT_DIGITS
    workers: int = DEFAULT_WORKERS

    @classmethod
    def from_settings(cls, settings: Dict[str, Any]) -> "NumericsConfig":
        """Flatten the `numerics`, `oracle` and `output` sections into a config."""
        numerics = settings.get("numerics", {}) or {}
        oracle = settings.get("oracle", {}) or {}
        output = settings.get("output", {}) or {}
        flat: Dict[str, Any] = dict(numerics)
        flat.update({f"oracle_{key}": value for key, value in oracle.items()})
        flat.update(output)

        values: Dict[str, Any] = {}
        for item in fields(cls):
            if item.name not in flat or flat[item.name] is None:
                continue
            caster = int if isinstance(item.default, int) else float
            values[item.name] = caster(flat[item.name])
        return cls(**values)


_active_numerics: Optional[NumericsConfig] = None


def get_numerics() -> NumericsConfig:
    """Return the active numerics config, loading config.yaml on first use."""
    global _active_numerics
    if _active_numerics is None:
        from settings_manager import load_effective_settings

        _active_numerics = NumericsConfig.from_settings(load_effective_settings(None))
    return _active_numerics


def set_numerics(numerics: Optional[NumericsConfig]) -> None:
    """Replace the active numerics config (None reloads from disk on next use)."""
    global _active_numerics
    _active_numerics = numerics
