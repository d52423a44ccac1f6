"""Executable checks of the stated properties."""
from verification.models import Check, CheckResult
from verification.registry import SuiteEntry, get_suite, list_suites, run_suite

__all__ = ["Check", "CheckResult", "SuiteEntry", "get_suite", "list_suites", "run_suite"]
