"""Property checks behind `verify`, one function per stated invariant."""
from __future__ import annotations

import cmath
import math
from typing import Dict, List, Sequence

import numpy as np

from bounds.analytic import (
    blumenthal_upper,
    c0_upper,
    c1_upper,
    classical_upper,
    cn_upper,
    convexity_upper,
    marchetti_h,
)
from constants.sharp import c_0_alpha, c_n_alpha, g_seq, gamma_p, limit_constant, limit_root, r_alpha
from oracle.grid import default_grid_spec, grid_sup, zero_order_sup
from oracle.series import series_log_abs_en
from primary_factor.circle import circle_max
from primary_factor.evaluation import (
    eval_en,
    g_value,
    limsup_at_infinity,
    limsup_at_zero,
    log_abs_en,
    log_abs_en_ray,
)
from special_fn.expint import EULER_GAMMA, expint_ei
from special_fn.lambert import lambert_w0
from verification.models import CheckOutcome

ALPHA_STEP = 0.02
SEED = 20240601
# Ei(1) to 20 digits.
EI_AT_ONE = 1.8951178163559367555


def _alpha_grid(step: float = ALPHA_STEP) -> List[float]:
    count = int(round(1.0 / step))
    return [round(i * step, 12) for i in range(count + 1)]


def _interior_alphas() -> List[float]:
    return [round(0.01 * i, 12) for i in range(1, 100)]


def _constants(n: int, alphas: Sequence[float]) -> List[float]:
    return [c_n_alpha(n, alpha).value for alpha in alphas]


def _worst(pairs: Dict[str, float], limit: float) -> CheckOutcome:
    """Pass when every tracked quantity stays below `limit`; report the largest."""
    if not pairs:
        return True, "nothing to check"
    key = max(pairs, key=lambda k: pairs[k])
    return pairs[key] <= limit, f"worst {key}: {pairs[key]:.3e} (limit {limit:.1e})"


def _violations(items: List[str]) -> CheckOutcome:
    if items:
        return False, f"{len(items)} violation(s), first: {items[0]}"
    return True, "ok"


# -------------------- ray maximality and small/large |z| --------------------
def check_ray_maximality() -> CheckOutcome:
    gaps: Dict[str, float] = {}
    for n in range(1, 6):
        threshold = 1.0 + 1.0 / n
        for r in (threshold, 1.25 * threshold, 2.0, 3.0, 5.0):
            if r < threshold:
                continue
            gaps[f"n={n} r={r:g}"] = abs(circle_max(n, r).value - log_abs_en_ray(n, r))
    return _worst(gaps, 1e-8)


def check_inner_monotonicity() -> CheckOutcome:
    problems: List[str] = []
    for n in (1, 2, 3):
        radii = np.linspace(0.05, 1.0 + 1.0 / n, 24)
        maxima = [circle_max(n, float(r)).value for r in radii]
        for alpha in (0.0, 0.5, 1.0):
            scaled = [m / r ** (n + alpha) for m, r in zip(maxima, radii)]
            for i in range(1, len(scaled)):
                if scaled[i] < scaled[i - 1] - 1e-9:
                    problems.append(f"n={n} alpha={alpha} r={radii[i]:.4f}")
    return _violations(problems)


def check_limsup_at_zero() -> CheckOutcome:
    gaps: Dict[str, float] = {}
    for n in range(1, 6):
        # cos((n+1) theta) = -1 on this ray.
        theta = math.pi / (n + 1)
        gaps[f"n={n} alpha=1"] = abs(g_value(n, 1.0, cmath.rect(1e-7, theta)) - limsup_at_zero(n, 1.0))
    rng = np.random.default_rng(SEED)
    for n in range(1, 6):
        for alpha in (0.0, 0.5, 0.9):
            theta = float(rng.uniform(-math.pi, math.pi))
            r = 1e-8
            excess = abs(g_value(n, alpha, cmath.rect(r, theta))) - r ** (1.0 - alpha)
            gaps[f"n={n} alpha={alpha}"] = max(excess, 0.0)
    return _worst(gaps, 1e-6)


def check_growth_at_infinity() -> CheckOutcome:
    problems: List[str] = []
    for n in range(1, 6):
        for r in (2.5, 5.0, 10.0, 50.0):
            if not g_value(n, 0.0, r) > limsup_at_infinity(n, 0.0):
                problems.append(f"g(r) <= 1/n at n={n}, r={r}")
        for alpha in (0.25, 1.0):
            r = 1e4
            worst = max(g_value(n, alpha, cmath.rect(r, t)) for t in np.linspace(-math.pi, math.pi, 17))
            if worst > 2.0 * r ** (-alpha):
                problems.append(f"no decay at n={n}, alpha={alpha}")
    return _violations(problems)


# -------------------- n >= 1: golden values, monotonicity in n, limit --------------------
def check_golden_values() -> CheckOutcome:
    gaps = {
        "C_{1,1}": abs(c_n_alpha(1, 1.0).value - 0.5),
        "C_{2,0}": abs(c_n_alpha(2, 0.0).value - 1.0),
        "C_{1,0}": abs(c_n_alpha(1, 0.0).value - (1.0 + lambert_w0(math.exp(-1.0)))),
        "C_{0,1}": abs(c_0_alpha(1.0).value - 1.0),
    }
    return _worst(gaps, 1e-9)


def check_alpha_one_increasing_in_n() -> CheckOutcome:
    values = [c_n_alpha(n, 1.0).value for n in range(1, 31)]
    return _violations([f"n={i + 2}" for i in range(29) if values[i + 1] < values[i] - 1e-12])


def check_alpha_zero_decreasing_in_n() -> CheckOutcome:
    values = [c_n_alpha(n, 0.0).value for n in range(1, 31)]
    return _violations([f"n={i + 2}" for i in range(29) if values[i + 1] > values[i] + 1e-12])


def check_normalized_sequence() -> CheckOutcome:
    values = [g_seq(n) for n in range(1, 31)]
    problems = [f"g_{n} outside (0, 1]" for n, g in enumerate(values, 1) if not 0.0 < g <= 1.0 + 1e-12]
    problems += [f"g_{i + 2} > g_{i + 1}" for i in range(29) if values[i + 1] > values[i] + 1e-12]
    return _violations(problems)


def check_limit_constant() -> CheckOutcome:
    root = limit_root()
    value = limit_constant()
    residual = abs(math.exp(root) / root - expint_ei(root))
    passed = 0.7418 <= value <= 0.7428 and residual <= 1e-10
    return passed, f"1/x0 = {value:.10f}, residual {residual:.1e}"


def check_large_order_limit() -> CheckOutcome:
    limit = limit_constant()
    gaps = {f"alpha={alpha}": abs(c_n_alpha(200, alpha).value - limit) for alpha in (0.0, 0.5, 1.0)}
    return _worst(gaps, 0.01)


def check_normalized_upper_bounds() -> CheckOutcome:
    problems: List[str] = []
    for n in range(1, 31):
        c_n1 = c_n_alpha(n, 1.0).value
        if g_seq(n) > marchetti_h(n) + 1e-12:
            problems.append(f"g_{n} > h_{n}")
        if c_n1 > blumenthal_upper(n) + 1e-12:
            problems.append(f"C_{{{n},1}} > n/(n+1)")
        if blumenthal_upper(n) > classical_upper(n):
            problems.append(f"n/(n+1) > 3e(2 + ln n) at n={n}")
    return _violations(problems)


# -------------------- n = 0 --------------------
def check_closed_form_vs_maximization() -> CheckOutcome:
    gaps = {f"alpha={a}": abs(c_0_alpha(a).value - zero_order_sup(a).value) for a in _interior_alphas()}
    return _worst(gaps, 1e-9)


def check_small_alpha_asymptotic() -> CheckOutcome:
    alpha = 0.001
    scaled = alpha * c_0_alpha(alpha).value
    relative = abs(scaled / math.exp(-1.0) - 1.0)
    return relative <= 0.01, f"alpha*C_(0,alpha) = {scaled:.8f} at alpha={alpha}, relative gap {relative:.2e}"


def check_r_alpha_interval() -> CheckOutcome:
    return _violations([f"alpha={a}" for a in _interior_alphas() if not 0.0 < r_alpha(a) < a])


def check_maximizing_radius() -> CheckOutcome:
    gaps: Dict[str, float] = {}
    for alpha in _interior_alphas():
        radius = c_0_alpha(alpha).maximizing_radius
        if not math.isfinite(radius) or radius > 1e12:
            continue
        # R = alpha (1 + R) ln(1 + R) at the maximizer.
        gaps[f"alpha={alpha}"] = abs(radius - alpha * (1.0 + radius) * math.log1p(radius)) / (1.0 + radius)
    return _worst(gaps, 1e-8)


def check_zero_order_upper_bound() -> CheckOutcome:
    alphas = _interior_alphas() + [1.0]
    return _violations([f"alpha={a}" for a in alphas if c_0_alpha(a).value > c0_upper(a) + 1e-12])


def check_gamma_structure() -> CheckOutcome:
    problems: List[str] = []
    if abs(gamma_p(1.0) - 1.0) > 1e-9:
        problems.append("Gamma_1 != 1")
    if abs(gamma_p(2.0) - 0.5) > 1e-9:
        problems.append("Gamma_2 != 0.5")
    if gamma_p(2.001) < 0.95:
        problems.append("no jump towards C_{2,0} just past p = 2")
    # On (0, 1] Gamma_p = C_{0,p} falls to one interior minimum and climbs back to 1.
    values = [gamma_p(round(0.05 * i, 12)) for i in range(1, 21)]
    low = values.index(min(values))
    if any(b >= a for a, b in zip(values[: low + 1], values[1 : low + 1])):
        problems.append("Gamma_p not decreasing before its minimum on (0, 1]")
    if any(b <= a for a, b in zip(values[low:], values[low + 1 :])):
        problems.append("Gamma_p not increasing after its minimum on (0, 1]")
    return _violations(problems)


# -------------------- alpha-dependence and the derived bounds --------------------
def check_monotone_in_alpha() -> CheckOutcome:
    alphas = _alpha_grid()
    problems: List[str] = []
    for n in range(1, 13):
        values = _constants(n, alphas)
        problems += [f"n={n} alpha={alphas[i + 1]}" for i in range(len(values) - 1) if values[i + 1] > values[i] + 1e-9]
    return _violations(problems)


def check_convex_in_alpha() -> CheckOutcome:
    alphas = _alpha_grid()
    problems: List[str] = []
    for n in range(1, 13):
        values = _constants(n, alphas)
        for i in range(1, len(values) - 1):
            if values[i - 1] - 2.0 * values[i] + values[i + 1] < -1e-8:
                problems.append(f"n={n} alpha={alphas[i]}")
    return _violations(problems)


def check_chord_sandwich() -> CheckOutcome:
    problems: List[str] = []
    for n in range(1, 13):
        c_n1 = c_n_alpha(n, 1.0).value
        for alpha in _alpha_grid():
            value = c_n_alpha(n, alpha).value
            if value < c_n1 - 1e-9 or value > convexity_upper(n, alpha) + 1e-9:
                problems.append(f"n={n} alpha={alpha}")
    return _violations(problems)


def check_first_order_chord() -> CheckOutcome:
    return _violations([f"alpha={a}" for a in _alpha_grid() if c_n_alpha(1, a).value > c1_upper(a) + 1e-9])


def check_higher_order_bound() -> CheckOutcome:
    problems: List[str] = []
    for n in range(2, 13):
        for alpha in _alpha_grid():
            bound = cn_upper(n, alpha)
            if c_n_alpha(n, alpha).value > bound + 1e-9 or bound > 1.0 + 1e-12:
                problems.append(f"n={n} alpha={alpha}")
    return _violations(problems)


# -------------------- brute-force oracle --------------------
def check_grid_sup_agreement() -> CheckOutcome:
    problems: List[str] = []
    worst = 0.0
    for n in range(1, 6):
        for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
            constant = c_n_alpha(n, alpha).value
            found = grid_sup(n, alpha).value
            worst = max(worst, constant - found)
            if not constant - 5e-3 <= found <= constant + 1e-9:
                problems.append(f"n={n} alpha={alpha}: grid {found:.6f} vs C {constant:.6f}")
    passed, detail = _violations(problems)
    return passed, f"{detail}; largest shortfall {worst:.2e}"


def check_grid_argmax_on_ray() -> CheckOutcome:
    problems: List[str] = []
    for n in range(1, 6):
        spec = default_grid_spec(n)
        cell = 2.0 * math.pi / spec.angular_steps
        for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
            result = grid_sup(n, alpha, spec)
            if result.radius < 1.0 + 1.0 / n:
                continue
            distance = min(result.angle, 2.0 * math.pi - result.angle)
            if distance > cell:
                problems.append(f"n={n} alpha={alpha}: angle {result.angle:.4f}")
    return _violations(problems)


def check_series_enclosures() -> CheckOutcome:
    cases = ((1, 0.5j, 200), (3, cmath.rect(0.99, 2.0), 100_000), (2, cmath.rect(0.3, math.pi / 3), 60))
    problems: List[str] = []
    for n, z, terms in cases:
        enclosure = series_log_abs_en(n, z, terms)
        direct = log_abs_en(n, z, threshold=0.0)
        if not enclosure.contains(direct, slack=1e-12):
            problems.append(f"n={n} z={z:.3f}")
    return _violations(problems)


# -------------------- special functions and branch stability --------------------
def check_lambert_round_trip() -> CheckOutcome:
    offsets = np.geomspace(1e-10, 1e6 + math.exp(-1.0), 10_000)
    xs = offsets - math.exp(-1.0)
    worst = 0.0
    for x in xs:
        w = lambert_w0(float(x))
        worst = max(worst, abs(w * math.exp(w) - x) / (abs(x) or 1.0))
    return worst <= 1e-14, f"largest relative residual {worst:.2e}"


def check_lambert_monotone() -> CheckOutcome:
    rng = np.random.default_rng(SEED)
    xs = np.sort(rng.uniform(-math.exp(-1.0), 50.0, 2000))
    ws = [lambert_w0(float(x)) for x in xs]
    return _violations([f"x={xs[i + 1]:.6g}" for i in range(len(ws) - 1) if xs[i + 1] > xs[i] and ws[i + 1] <= ws[i]])


def check_exponential_integral() -> CheckOutcome:
    gaps = {
        "Ei(1)": abs(expint_ei(1.0) - EI_AT_ONE),
        # Ei(x) - ln x - gamma = x + x^2/4 + ...
        "Ei(1e-6) - ln x - gamma - x": abs(expint_ei(1e-6) - math.log(1e-6) - EULER_GAMMA - 1e-6),
    }
    return _worst(gaps, 1e-12)


def check_branch_agreement() -> CheckOutcome:
    rng = np.random.default_rng(SEED)
    radii = rng.uniform(0.4, 0.6, 10_000)
    angles = rng.uniform(-math.pi, math.pi, 10_000)
    orders = rng.integers(0, 11, 10_000)
    worst = 0.0
    for r, theta, n in zip(radii, angles, orders):
        z = cmath.rect(float(r), float(theta))
        series = log_abs_en(int(n), z, threshold=0.99)
        direct = log_abs_en(int(n), z, threshold=0.0)
        worst = max(worst, abs(series - direct))
    return worst <= 1e-11, f"largest branch disagreement {worst:.2e}"


def check_exp_consistency() -> CheckOutcome:
    rng = np.random.default_rng(SEED + 1)
    worst = 0.0
    for _ in range(2000):
        n = int(rng.integers(0, 11))
        z = cmath.rect(float(rng.uniform(0.0, 3.0)), float(rng.uniform(-math.pi, math.pi)))
        modulus = abs(eval_en(n, z))
        if modulus == 0.0:
            continue
        worst = max(worst, abs(math.exp(log_abs_en(n, z)) / modulus - 1.0))
    return worst <= 1e-12, f"largest relative mismatch {worst:.2e}"


