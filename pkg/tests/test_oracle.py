import cmath
import math

import pytest

from config import NumericsConfig, set_numerics
from constants import c_0_alpha, c_n_alpha
from core.errors import DomainError
from oracle import GridSupSpec, default_grid_spec, grid_sup, series_log_abs_en, zero_order_sup
from primary_factor import log_abs_en

SMALL_SPEC = GridSupSpec(r_max=10.0, radial_steps=300, angular_steps=90)


# ---------------- grid supremum ----------------
def test_grid_sup_first_order():
    result = grid_sup(1, 1.0, GridSupSpec(r_max=20.0, radial_steps=2000, angular_steps=720))
    assert 0.5 - 5e-3 <= result.value <= 0.5 + 1e-9


def test_grid_sup_second_order_alpha_zero():
    result = grid_sup(2, 0.0, GridSupSpec(r_max=40.0, radial_steps=4000, angular_steps=720))
    assert result.value == pytest.approx(1.0, abs=5e-3)
    assert result.value <= c_n_alpha(2, 0.0).value + 1e-9


@pytest.mark.parametrize("n, alpha", [(1, 0.0), (2, 0.5), (3, 1.0)])
def test_refined_grid_never_decreases(n, alpha):
    coarse = grid_sup(n, alpha, SMALL_SPEC)
    fine = grid_sup(n, alpha, SMALL_SPEC.refined())
    assert fine.value >= coarse.value - 1e-12


def test_threaded_grid_matches_serial():
    spec = GridSupSpec(r_max=12.0, radial_steps=1200, angular_steps=720)
    serial = grid_sup(3, 0.5, spec)
    set_numerics(NumericsConfig(workers=4))
    assert grid_sup(3, 0.5, spec) == serial


def test_grid_sup_domain():
    with pytest.raises(DomainError):
        grid_sup(2, 0.5, GridSupSpec(r_max=1.2, radial_steps=10, angular_steps=10))
    with pytest.raises(DomainError):
        grid_sup(0, 0.5)
    with pytest.raises(DomainError):
        GridSupSpec(r_max=10.0, radial_steps=0, angular_steps=10)


def test_default_grid_spec_uses_configuration():
    spec = default_grid_spec(2)
    assert spec.r_max == pytest.approx(15.0)
    assert (spec.radial_steps, spec.angular_steps) == (4000, 720)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75, 1.0])
def test_grid_sup_agrees_with_ray_maximum(n, alpha):
    constant = c_n_alpha(n, alpha).value
    spec = default_grid_spec(n)
    result = grid_sup(n, alpha, spec)
    assert constant - 5e-3 <= result.value <= constant + 1e-9
    if result.radius >= 1.0 + 1.0 / n:
        cell = 2.0 * math.pi / spec.angular_steps
        assert min(result.angle, 2.0 * math.pi - result.angle) <= cell


# ---------------- tail series ----------------
def test_series_encloses_log_one_minus_r():
    enclosure = series_log_abs_en(0, 0.5, 200)
    assert enclosure.contains(math.log(0.5), slack=1e-15)


def test_series_encloses_direct_branch():
    enclosure = series_log_abs_en(1, 0.5j, 200)
    assert enclosure.contains(log_abs_en(1, 0.5j, threshold=0.0), slack=1e-15)


def test_slow_convergence_near_unit_circle():
    z = cmath.rect(0.99, 2.0)
    enclosure = series_log_abs_en(3, z, 100_000)
    assert enclosure.upper - enclosure.lower < 1e-10
    assert enclosure.contains(log_abs_en(3, z, threshold=0.0), slack=1e-12)


def test_series_tail_bound_shrinks_with_terms():
    z = cmath.rect(0.7, 1.0)
    assert series_log_abs_en(2, z, 80).tail_bound < series_log_abs_en(2, z, 20).tail_bound


@pytest.mark.parametrize("z, terms", [(1.0, 10), (1.5j, 10), (0.5, 0)])
def test_series_domain(z, terms):
    with pytest.raises(DomainError):
        series_log_abs_en(1, z, terms)


# ---------------- zero-order maximization ----------------
@pytest.mark.parametrize("alpha", [round(0.01 * i, 12) for i in range(1, 100)])
def test_zero_order_closed_form_matches_maximization(alpha):
    assert c_0_alpha(alpha).value == pytest.approx(zero_order_sup(alpha).value, abs=1e-9)


def test_zero_order_maximizer():
    report = zero_order_sup(0.5)
    assert math.exp(report.argument) == pytest.approx(c_0_alpha(0.5).maximizing_radius, rel=1e-4)


def test_zero_order_alpha_one_approaches_one():
    assert zero_order_sup(1.0).value == pytest.approx(1.0, abs=1e-12)
