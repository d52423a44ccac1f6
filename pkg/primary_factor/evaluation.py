"""Evaluation of E_n(z), ln|E_n(z)| and the normalized growth ratio g."""
from __future__ import annotations

import cmath
import math
import sys

import numpy as np

from config import get_numerics
from core.errors import DomainError, RangeError
from primary_factor.models import OrderLike, as_order, as_point, validate_exponent

LOG_FLOAT_MAX = math.log(sys.float_info.max)
MAX_SERIES_TERMS = 100_000


def eval_en(n: OrderLike, z: complex) -> complex:
    """Return E_n(z) = (1 - z) exp(sum_{k=1}^n z^k / k); E_0(z) = 1 - z."""
    n = as_order(n)
    z = as_point(z)
    if n == 0:
        return 1.0 - z

    exponent = 0j
    power = 1 + 0j
    try:
        for k in range(1, n + 1):
            power *= z
            exponent += power / k
    except OverflowError as exc:
        raise RangeError(f"Exponent of E_{n}({z!r}) is not representable") from exc
    one_minus_z = 1.0 - z
    if not cmath.isfinite(exponent):
        raise RangeError(f"Exponent of E_{n}({z!r}) is not representable")
    if one_minus_z == 0:
        return 0j
    log_modulus = exponent.real + math.log(abs(one_minus_z))
    if log_modulus > LOG_FLOAT_MAX:
        raise RangeError(f"|E_{n}({z!r})| exceeds the floating-point range")
    if exponent.real > LOG_FLOAT_MAX:
        # exp alone would overflow although the product fits.
        return cmath.exp(exponent + cmath.log(one_minus_z))
    return one_minus_z * cmath.exp(exponent)


def _tail_series(n: int, z: complex, scale_exponent: float, tolerance: float) -> float:
    """-sum_{k>n} Re(z^k)/k / |z|^s, stopped by the geometric tail bound."""
    r = abs(z)
    unit = z / r
    log_r = math.log(r)
    rotation = unit ** (n + 1)
    # Tail is measured relative to r^(n+1)/(n+1), the size of its leading addend.
    total = 0.0
    k = n + 1
    while k <= n + MAX_SERIES_TERMS:
        weight = math.exp((k - scale_exponent) * log_r)
        if weight == 0.0:
            break
        total -= rotation.real * weight / k
        if r ** (k - n) / ((k + 1) * (1.0 - r)) * (n + 1) < tolerance:
            break
        rotation *= unit
        k += 1
    return total


def _direct_sum(n: int, z: complex, scale_exponent: float) -> float:
    """(ln|1 - z| + sum_{k<=n} Re(z^k)/k) / |z|^s."""
    r = abs(z)
    unit = z / r
    log_r = math.log(r)
    try:
        total = math.log(abs(1.0 - z)) * math.exp(-scale_exponent * log_r)
        rotation = 1 + 0j
        for k in range(1, n + 1):
            rotation *= unit
            total += rotation.real * math.exp((k - scale_exponent) * log_r) / k
    except OverflowError as exc:
        raise RangeError(f"ln|E_{n}({z!r})| exceeds the floating-point range") from exc
    if not math.isfinite(total):
        raise RangeError(f"ln|E_{n}({z!r})| exceeds the floating-point range")
    return total


def _resolve_threshold(threshold: float | None) -> float:
    threshold = get_numerics().series_threshold if threshold is None else threshold
    if not 0.0 <= threshold < 1.0:
        raise DomainError(f"Series threshold must lie in [0, 1), got {threshold!r}")
    return threshold


def _scaled_log_abs(n: int, z: complex, scale_exponent: float, threshold: float | None) -> float:
    numerics = get_numerics()
    threshold = _resolve_threshold(threshold)
    if z == 1:
        return -math.inf
    if abs(z) <= threshold:
        return _tail_series(n, z, scale_exponent, numerics.series_tolerance)
    return _direct_sum(n, z, scale_exponent)


def log_abs_en(n: OrderLike, z: complex, *, threshold: float | None = None) -> float:
    """
    Return ln|E_n(z)|, or -inf at z = 1.

    Points with |z| <= threshold use the tail series
    -sum_{k>n} r^k cos(k theta)/k, all others ln|1 - z| + sum_{k<=n} Re(z^k)/k.
    """
    n = as_order(n)
    z = as_point(z)
    if z == 0:
        return 0.0
    return _scaled_log_abs(n, z, 0.0, threshold)


def log_abs_en_ray(n: OrderLike, r: float) -> float:
    """Return ln(r - 1) + sum_{k=1}^n r^k / k, which equals ln|E_n(r)| for r > 1."""
    n = as_order(n)
    if n < 1:
        raise DomainError(f"log_abs_en_ray requires n >= 1, got {n}")
    if not r > 1.0:
        raise DomainError(f"log_abs_en_ray requires r > 1, got {r!r}")
    total = math.log(r - 1.0)
    power = 1.0
    try:
        for k in range(1, n + 1):
            power *= r
            total += power / k
    except OverflowError as exc:
        raise RangeError(f"ln|E_{n}({r!r})| exceeds the floating-point range") from exc
    if not math.isfinite(total):
        raise RangeError(f"ln|E_{n}({r!r})| exceeds the floating-point range")
    return total


def ray_ratio(n: int, alpha: float, r: float) -> float:
    """
    Return ln|E_n(r)| / r^(n+alpha) for r > 1 without forming r^n.

    Evaluated as ln(r - 1) r^-(n+alpha) + sum_k r^(k-n-alpha) / k, so large
    orders and radii stay inside the floating-point range.
    """
    exponent = n + alpha
    log_r = math.log(r)
    total = math.log(r - 1.0) * math.exp(-exponent * log_r)
    for k in range(1, n + 1):
        total += math.exp((k - exponent) * log_r) / k
    return total


def ray_ratio_array(n: int, alpha: float, radii: np.ndarray) -> np.ndarray:
    """Vectorized ray_ratio over radii > 1."""
    radii = np.asarray(radii, dtype=float)
    exponent = n + alpha
    log_r = np.log(radii)[:, None]
    k = np.arange(1, n + 1, dtype=float)[None, :]
    series = (np.exp((k - exponent) * log_r) / k).sum(axis=1)
    return np.log(radii - 1.0) * np.exp(-exponent * log_r[:, 0]) + series


def g_value(n: OrderLike, alpha: float, z: complex, *, threshold: float | None = None) -> float:
    """Return g(z) = ln|E_n(z)| / |z|^(n+alpha); -inf at z = 1."""
    n = as_order(n)
    validate_exponent(n, alpha)
    z = as_point(z)
    if z == 0:
        raise DomainError("g is undefined at z = 0")
    return _scaled_log_abs(n, z, n + alpha, threshold)


def log_abs_en_array(
    n: OrderLike,
    z: np.ndarray,
    *,
    threshold: float | None = None,
    scale_exponent: float = 0.0,
) -> np.ndarray:
    """
    Vectorized ln|E_n(z)| / |z|^scale_exponent with the same branch rule as log_abs_en.

    Entries at z = 1 are -inf. Entries at z = 0 are 0 when scale_exponent is
    0 and NaN otherwise.
    """
    n = as_order(n)
    numerics = get_numerics()
    threshold = _resolve_threshold(threshold)
    z = np.asarray(z, dtype=complex)
    r = np.abs(z)
    theta = np.angle(z)
    result = np.empty(z.shape, dtype=float)

    with np.errstate(divide="ignore", invalid="ignore"):
        log_r = np.log(r)
        series_mask = r <= threshold
        direct_mask = ~series_mask

        if direct_mask.any():
            lr = log_r[direct_mask]
            th = theta[direct_mask]
            values = np.log(np.abs(1.0 - z[direct_mask])) * np.exp(-scale_exponent * lr)
            for k in range(1, n + 1):
                values += np.cos(k * th) * np.exp((k - scale_exponent) * lr) / k
            result[direct_mask] = values

        if series_mask.any():
            lr = log_r[series_mask]
            th = theta[series_mask]
            r_max = float(r[series_mask].max())
            if 0.0 < r_max < 1.0:
                count = math.ceil(math.log(numerics.series_tolerance * (1.0 - r_max)) / math.log(r_max)) + 1
                count = min(max(count, 1), MAX_SERIES_TERMS)
            else:
                count = 1
            values = np.zeros(lr.shape, dtype=float)
            for k in range(n + 1, n + count + 1):
                values -= np.cos(k * th) * np.exp((k - scale_exponent) * lr) / k
            result[series_mask] = values

    origin = r == 0.0
    if origin.any():
        result[origin] = 0.0 if scale_exponent == 0.0 else np.nan
    return result


def limsup_at_zero(n: OrderLike, alpha: float) -> float:
    """limsup of g(z) as z -> 0: 0 for alpha < 1 and 1/(n+1) for alpha = 1."""
    n = as_order(n)
    if n < 1:
        raise DomainError(f"limsup_at_zero is stated for n >= 1, got {n}")
    validate_exponent(n, alpha)
    return 1.0 / (n + 1) if alpha == 1.0 else 0.0


def limsup_at_infinity(n: OrderLike, alpha: float) -> float:
    """limsup of g(z) as |z| -> infinity: 1/n for alpha = 0 and 0 otherwise."""
    n = as_order(n)
    if n < 1:
        raise DomainError(f"limsup_at_infinity is stated for n >= 1, got {n}")
    validate_exponent(n, alpha)
    return 1.0 / n if alpha == 0.0 else 0.0
