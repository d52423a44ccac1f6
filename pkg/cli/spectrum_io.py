"""Reader for spectrum files: one nonnegative decimal per line, `#` comments."""
from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import List

from bounds.models import SpectrumSample
from core.errors import SpectrumInputError

logger = logging.getLogger(__name__)


def parse_spectrum(text: str, source: str = "<input>") -> SpectrumSample:
    values: List[float] = []
    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            value = float(line)
        except ValueError as exc:
            raise SpectrumInputError(f"{source}:{line_number}: not a number: {line!r}", line_number) from exc
        if not math.isfinite(value):
            raise SpectrumInputError(f"{source}:{line_number}: entry must be finite", line_number)
        if value < 0.0:
            raise SpectrumInputError(f"{source}:{line_number}: negative entry {value!r}", line_number)
        values.append(value)
    logger.debug("Read %d spectrum entries from %s", len(values), source)
    return SpectrumSample.from_values(values)


def read_spectrum(path: Path) -> SpectrumSample:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise SpectrumInputError(f"Cannot read spectrum file {path}: {exc}") from exc
    return parse_spectrum(text, str(path))
