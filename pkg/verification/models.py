"""Result types of the verification suites."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple

# A check returns (passed, human-readable detail).
CheckOutcome = Tuple[bool, str]
CheckFunction = Callable[[], CheckOutcome]


@dataclass(frozen=True)
class Check:
    name: str
    run: CheckFunction


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str

    @property
    def label(self) -> str:
        return "PASS" if self.passed else "FAIL"
