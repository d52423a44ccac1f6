"""Utility helpers for loading toolkit settings from YAML."""
from __future__ import annotations

import logging
from copy import deepcopy
from pathlib import Path
from typing import Any, Dict

import yaml

from config import (
    DEFAULT_CIRCLE_SAMPLES,
    DEFAULT_LOG_LEVEL,
    DEFAULT_MAX_BRACKET_DOUBLINGS,
    DEFAULT_MAX_ORDER,
    DEFAULT_ORACLE_ANGULAR_STEPS,
    DEFAULT_ORACLE_R_MAX_FACTOR,
    DEFAULT_ORACLE_R_MIN,
    DEFAULT_ORACLE_RADIAL_STEPS,
    DEFAULT_RESIDUAL_TOLERANCE,
    DEFAULT_SCAN_POINTS,
    DEFAULT_SERIES_THRESHOLD,
    DEFAULT_SERIES_TOLERANCE,
    DEFAULT_SIGNIFICANT_DIGITS,
    DEFAULT_SOLVER_TOLERANCE,
    DEFAULT_WORKERS,
)

logger = logging.getLogger(__name__)

# Global config file placed next to the main sources.
CONFIG_PATH = Path(__file__).resolve().parent / "config.yaml"

# Default shape of the settings tree; config.yaml and --config files override it.
DEFAULT_SETTINGS: Dict[str, Any] = {
    "numerics": {
        "series_threshold": DEFAULT_SERIES_THRESHOLD,
        "series_tolerance": DEFAULT_SERIES_TOLERANCE,
        "solver_tolerance": DEFAULT_SOLVER_TOLERANCE,
        "residual_tolerance": DEFAULT_RESIDUAL_TOLERANCE,
        "circle_samples": DEFAULT_CIRCLE_SAMPLES,
        "scan_points": DEFAULT_SCAN_POINTS,
        "max_bracket_doublings": DEFAULT_MAX_BRACKET_DOUBLINGS,
        "max_order": DEFAULT_MAX_ORDER,
    },
    "oracle": {
        "radial_steps": DEFAULT_ORACLE_RADIAL_STEPS,
        "angular_steps": DEFAULT_ORACLE_ANGULAR_STEPS,
        "r_min": DEFAULT_ORACLE_R_MIN,
        "r_max_factor": DEFAULT_ORACLE_R_MAX_FACTOR,
    },
    "output": {
        "significant_digits": DEFAULT_SIGNIFICANT_DIGITS,
        "workers": DEFAULT_WORKERS,
    },
    "logging": {
        "level": DEFAULT_LOG_LEVEL,
    },
}


def _merge_dicts(base: Dict[str, Any], extra: Dict[str, Any]) -> Dict[str, Any]:
    """Deep-merge two dictionaries without mutating the inputs."""
    merged = deepcopy(base)
    for key, value in extra.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge_dicts(merged[key], value)
        else:
            merged[key] = value
    return merged


def _read_settings_file(path: Path) -> Dict[str, Any]:
    """Return the mapping stored in a YAML file, or {} when it is unusable."""
    try:
        raw_data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except (OSError, yaml.YAMLError) as exc:
        logger.warning("Ignoring unreadable settings file %s: %s", path, exc)
        return {}
    if not isinstance(raw_data, dict):
        logger.warning("Ignoring settings file %s: top level must be a mapping", path)
        return {}
    return raw_data


def load_global_settings() -> Dict[str, Any]:
    """Load global settings from config.yaml (or return defaults)."""
    settings = deepcopy(DEFAULT_SETTINGS)
    if not CONFIG_PATH.is_file():
        return settings
    return _merge_dicts(settings, _read_settings_file(CONFIG_PATH))


def load_effective_settings(override_path: Path | None) -> Dict[str, Any]:
    """Return global settings merged with a user-supplied override file (if any)."""
    global_settings = load_global_settings()
    if override_path is None:
        return global_settings
    if not override_path.is_file():
        logger.warning("Settings override %s does not exist; using global settings", override_path)
        return global_settings
    return _merge_dicts(global_settings, _read_settings_file(override_path))
