import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import DomainError, RangeError
from primary_factor import (
    FactorOrder,
    circle_max,
    eval_en,
    g_value,
    limsup_at_infinity,
    limsup_at_zero,
    log_abs_en,
    log_abs_en_array,
    log_abs_en_ray,
    ray_ratio,
    ray_ratio_array,
)

orders = st.integers(min_value=0, max_value=10)
angles = st.floats(min_value=-math.pi, max_value=math.pi)


# ---------------- E_n and ln|E_n| ----------------
def test_eval_en_reference_values():
    assert eval_en(0, 0) == 1
    assert eval_en(3, 1) == 0
    assert eval_en(1, 2).real == pytest.approx(-math.exp(2.0), rel=1e-14)
    assert abs(eval_en(1, 2).imag) < 1e-12


def test_eval_en_overflow_is_a_range_error():
    with pytest.raises(RangeError):
        eval_en(50, 100.0)


@pytest.mark.parametrize("bad", [-1, 1.5, True])
def test_factor_order_validation(bad):
    with pytest.raises(DomainError):
        FactorOrder(bad)


def test_log_abs_en_reference_values():
    assert log_abs_en(2, 0) == 0.0
    assert log_abs_en(1, 2) == pytest.approx(2.0, abs=1e-14)
    assert log_abs_en(3, 1) == -math.inf


def test_log_abs_en_matches_tail_series():
    z = cmath.rect(0.3, math.pi / 3)
    expected = -math.fsum(0.3**k * math.cos(k * math.pi / 3) / k for k in range(3, 60))
    assert log_abs_en(2, z) == pytest.approx(expected, abs=1e-12)


def test_series_threshold_must_be_below_one():
    with pytest.raises(DomainError):
        log_abs_en(2, 0.5, threshold=1.0)


@given(orders, st.floats(min_value=0.4, max_value=0.6), angles)
@settings(max_examples=500)
def test_series_and_direct_branches_agree(n, r, theta):
    z = cmath.rect(r, theta)
    series = log_abs_en(n, z, threshold=0.99)
    direct = log_abs_en(n, z, threshold=0.0)
    assert abs(series - direct) <= 1e-11


@given(st.integers(min_value=0, max_value=8), st.floats(min_value=0.05, max_value=2.0), angles)
@settings(max_examples=300)
def test_log_abs_en_is_log_of_modulus(n, r, theta):
    z = cmath.rect(r, theta)
    modulus = abs(eval_en(n, z))
    if modulus == 0.0 or abs(z - 1) < 1e-6:
        return
    expected = math.log(modulus)
    assert log_abs_en(n, z) == pytest.approx(expected, abs=1e-11, rel=1e-13)


def test_array_evaluation_matches_scalar():
    rng = np.random.default_rng(7)
    z = rng.uniform(0.0, 3.0, 400) * np.exp(1j * rng.uniform(-math.pi, math.pi, 400))
    for n in (0, 1, 4):
        expected = [log_abs_en(n, complex(p)) for p in z]
        np.testing.assert_allclose(log_abs_en_array(n, z), expected, rtol=1e-12, atol=1e-12)


def test_array_evaluation_at_origin():
    assert log_abs_en_array(2, np.array([0j]))[0] == 0.0
    assert math.isnan(log_abs_en_array(2, np.array([0j]), scale_exponent=2.5)[0])


# ---------------- ray ----------------
@pytest.mark.parametrize(
    "n, r, expected",
    [(1, 2.0, 2.0), (2, 2.0, 4.0), (3, 1.5, math.log(0.5) + 1.5 + 1.125 + 1.125)],
)
def test_log_abs_en_ray(n, r, expected):
    assert log_abs_en_ray(n, r) == pytest.approx(expected, abs=1e-14)
    assert log_abs_en_ray(n, r) == pytest.approx(log_abs_en(n, r), abs=1e-12)


@pytest.mark.parametrize("n, r", [(0, 2.0), (1, 1.0), (2, 0.5)])
def test_log_abs_en_ray_domain(n, r):
    with pytest.raises(DomainError):
        log_abs_en_ray(n, r)


def test_ray_ratio_forms_agree():
    radii = np.array([1.5, 2.0, 5.0, 40.0])
    for n, alpha in ((1, 0.0), (3, 0.5), (6, 1.0)):
        expected = [log_abs_en_ray(n, r) / r ** (n + alpha) for r in radii]
        np.testing.assert_allclose([ray_ratio(n, alpha, r) for r in radii], expected, rtol=1e-13)
        np.testing.assert_allclose(ray_ratio_array(n, alpha, radii), expected, rtol=1e-13)


def test_ray_ratio_stays_finite_for_large_orders():
    assert math.isfinite(ray_ratio(400, 0.5, 50.0))


# ---------------- g ----------------
def test_g_value_reference_values():
    assert g_value(1, 1.0, -1) == pytest.approx(math.log(2.0) - 1.0, abs=1e-14)
    assert g_value(1, 0.0, 3) == pytest.approx((math.log(2.0) + 3.0) / 3.0, abs=1e-14)
    assert g_value(1, 0.0, 3) > limsup_at_infinity(1, 0.0)
    assert g_value(2, 0.5, 1) == -math.inf


@pytest.mark.parametrize("n, alpha, z", [(1, 0.5, 0), (0, 0.0, 0.5), (1, 1.5, 0.5), (1, -0.1, 0.5)])
def test_g_value_domain(n, alpha, z):
    with pytest.raises(DomainError):
        g_value(n, alpha, z)


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_limsup_at_zero_is_approached(n):
    assert limsup_at_zero(n, 1.0) == 1.0 / (n + 1)
    assert limsup_at_zero(n, 0.5) == 0.0
    z = cmath.rect(1e-7, math.pi / (n + 1))
    assert g_value(n, 1.0, z) == pytest.approx(1.0 / (n + 1), abs=1e-6)


def test_limsup_at_infinity_values():
    assert limsup_at_infinity(2, 0.0) == 0.5
    assert limsup_at_infinity(2, 0.3) == 0.0
    with pytest.raises(DomainError):
        limsup_at_infinity(0, 0.5)


# ---------------- circle maximum ----------------
def test_circle_max_on_the_ray():
    theta, value = circle_max(1, 2.0, 720)
    assert theta == pytest.approx(0.0, abs=1e-6)
    assert value == pytest.approx(2.0, abs=1e-8)


@pytest.mark.parametrize("n, r", [(2, 1.5), (3, 4.0 / 3.0), (4, 2.0), (5, 3.0)])
def test_circle_max_equals_ray_value_beyond_threshold(n, r):
    assert circle_max(n, r).value == pytest.approx(log_abs_en_ray(n, r), abs=1e-8)


@pytest.mark.parametrize("r", [0.3, 0.9, 1.2, 2.5])
def test_coarse_circle_max_never_beats_fine(r):
    assert circle_max(1, r, 8).value <= circle_max(1, r, 4096).value + 1e-9


def test_circle_max_is_at_least_every_sample():
    n, r = 3, 0.8
    best = circle_max(n, r).value
    samples = log_abs_en_array(n, r * np.exp(1j * np.linspace(-math.pi, math.pi, 1001)))
    assert best >= samples.max() - 1e-12


@pytest.mark.parametrize("r, samples", [(0.0, 720), (-1.0, 720), (1.0, 4)])
def test_circle_max_domain(r, samples):
    with pytest.raises(DomainError):
        circle_max(1, r, samples)


def test_inner_maxima_grow_faster_than_power():
    n, alpha = 2, 0.5
    radii = np.linspace(0.05, 1.0 + 1.0 / n, 20)
    scaled = [circle_max(n, float(r)).value / r ** (n + alpha) for r in radii]
    assert all(b >= a - 1e-9 for a, b in zip(scaled, scaled[1:]))
