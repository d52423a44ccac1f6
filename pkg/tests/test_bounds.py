import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bounds import (
    EigencountInput,
    SpectrumSample,
    blumenthal_upper,
    c0_upper,
    c1_upper,
    classical_upper,
    cn_upper,
    convexity_upper,
    det_bound,
    eigencount_bound,
    marchetti_h,
)
from constants import c_0_alpha, c_n_alpha, g_seq, limit_constant
from core.errors import DomainError, RangeError

ALPHA_GRID = [round(0.02 * i, 12) for i in range(51)]

spectra = st.lists(st.floats(min_value=0.0, max_value=10.0), max_size=20)


# ---------------- analytic bounds ----------------
def test_convexity_upper_endpoints():
    assert convexity_upper(1, 0.0) == pytest.approx(1.27846, abs=1e-5)
    assert convexity_upper(1, 1.0) == pytest.approx(0.5, abs=1e-9)
    assert convexity_upper(3, 0.4) >= c_n_alpha(3, 0.4).value


def test_c1_upper():
    assert c1_upper(0.0) == pytest.approx(1.27846, abs=1e-5)
    assert c1_upper(1.0) == 0.5
    assert c1_upper(0.5) == pytest.approx(0.88923, abs=1e-5)
    assert c_n_alpha(1, 0.5).value <= c1_upper(0.5)


def test_cn_upper():
    assert cn_upper(2, 0.0) == 1.0
    assert cn_upper(2, 1.0) == pytest.approx(2.0 / 3.0)
    assert cn_upper(100, 1.0) == pytest.approx(limit_constant())
    with pytest.raises(DomainError):
        cn_upper(1, 0.5)


def test_c0_upper():
    assert c0_upper(1.0) == 1.0
    assert c0_upper(0.5) == pytest.approx(1.0)
    assert c0_upper(0.25) == pytest.approx(3.0**0.75)
    assert c_0_alpha(0.25).value <= c0_upper(0.25)
    with pytest.raises(DomainError):
        c0_upper(0.0)


def test_marchetti_h():
    assert marchetti_h(1) == 1.0
    assert marchetti_h(100_000) == pytest.approx(0.99953, abs=1e-4)
    assert all(g_seq(n) <= marchetti_h(n) + 1e-12 for n in range(1, 31))


def test_classical_bounds_hold():
    for n in range(1, 31):
        value = c_n_alpha(n, 1.0).value
        assert value <= blumenthal_upper(n) + 1e-12
        assert blumenthal_upper(n) <= classical_upper(n)


@pytest.mark.parametrize("alpha", [0.0, 0.1, 0.37, 0.5, 0.8, 1.0])
def test_first_order_chord_bound(alpha):
    assert c_n_alpha(1, alpha).value <= c1_upper(alpha) + 1e-9


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_higher_order_bound(n):
    for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
        bound = cn_upper(n, alpha)
        assert c_n_alpha(n, alpha).value <= bound + 1e-9
        assert bound <= 1.0 + 1e-12


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 13))
def test_sandwich_on_alpha_grid(n):
    lower = c_n_alpha(n, 1.0).value
    for alpha in ALPHA_GRID:
        value = c_n_alpha(n, alpha).value
        assert lower - 1e-9 <= value <= convexity_upper(n, alpha) + 1e-9
        if n >= 2:
            assert value <= cn_upper(n, alpha) + 1e-9


def test_zero_order_bound_on_grid():
    for alpha in [round(0.01 * i, 12) for i in range(1, 101)]:
        assert c_0_alpha(alpha).value <= c0_upper(alpha) + 1e-12


# ---------------- spectrum samples ----------------
def test_spectrum_sample_validation():
    with pytest.raises(DomainError):
        SpectrumSample((1.0, -0.5))
    with pytest.raises(DomainError):
        SpectrumSample((0.5, 1.0))
    with pytest.raises(DomainError):
        SpectrumSample.from_values([1.0, math.nan])
    assert SpectrumSample.from_values([0.25, 1.0, 0.5]).values == (1.0, 0.5, 0.25)


# ---------------- determinant bound ----------------
def test_det_bound_reference_values():
    assert det_bound(2.0, [0.0]).bound == 1.0
    assert det_bound(1.0, [0.5, 0.25]).bound == pytest.approx(math.exp(0.75), rel=1e-9)
    assert det_bound(2.0, [1.0, 1.0]).bound == pytest.approx(math.e, rel=1e-9)


def test_det_bound_accepts_eigenvalue_moduli_in_any_order():
    assert det_bound(1.5, [0.1, 0.7, 0.3]).log_bound == pytest.approx(
        det_bound(1.5, SpectrumSample.from_values([0.7, 0.3, 0.1])).log_bound
    )


def test_det_bound_overflow_stays_in_log_scale():
    result = det_bound(1.0, [1000.0])
    assert result.log_bound == pytest.approx(1000.0)
    assert result.overflows
    with pytest.raises(RangeError):
        result.bound


def test_det_bound_domain():
    with pytest.raises(DomainError):
        det_bound(0.0, [1.0])


@given(spectra, spectra, st.sampled_from([0.5, 1.0, 1.5, 2.0, 3.3]))
@settings(max_examples=100, deadline=None)
def test_log_det_bound_is_additive(a, b, p):
    left = SpectrumSample.from_values(a)
    right = SpectrumSample.from_values(b)
    combined = det_bound(p, left.concat(right)).log_bound
    separate = det_bound(p, left).log_bound + det_bound(p, right).log_bound
    assert combined == pytest.approx(separate, rel=1e-12, abs=1e-12)


# ---------------- eigenvalue counting bound ----------------
def _input(s: float, values=(1.0,), p: float = 2.0, norm_a: float = 0.0) -> EigencountInput:
    return EigencountInput(p=p, r_p=1.0, norm_a=norm_a, s=s, approx_numbers=SpectrumSample.from_values(values))


def test_eigencount_reference_values():
    assert eigencount_bound(_input(2.0)) == pytest.approx(0.125, rel=1e-9)
    assert eigencount_bound(_input(2.0, values=(0.0, 0.0))) == 0.0


def test_eigencount_far_radius_stays_in_range():
    # s / s^2 = 1e-200 although s^2 itself overflows.
    assert eigencount_bound(_input(1e200, p=1.0)) == pytest.approx(1e-200, rel=1e-12)


def test_eigencount_tiny_distance_stays_in_range():
    # (s - ||A||)^3 = 1e-330 underflows; the bound 0.5 * 1e-110 / 1e-330 does not.
    assert eigencount_bound(_input(1e-110)) == pytest.approx(5e219, rel=1e-8)


def test_eigencount_overflow_is_inf():
    assert eigencount_bound(_input(1e-200)) == math.inf


@pytest.mark.parametrize("s", [math.inf, math.nan])
def test_eigencount_rejects_non_finite_radius(s):
    with pytest.raises(DomainError):
        _input(s)


def test_eigencount_requires_radius_beyond_norm():
    with pytest.raises(DomainError):
        _input(1.0, norm_a=1.0)
    with pytest.raises(DomainError):
        EigencountInput(p=2.0, r_p=0.0, norm_a=0.0, s=1.0, approx_numbers=SpectrumSample(()))


def test_eigencount_decreases_in_s():
    # s / (s - ||A||)^(p+1) decreases once s > (p+1)/p ||A||.
    p, norm_a = 2.0, 1.0
    radii = [1.5 + 0.25 * i for i in range(40)]
    values = [eigencount_bound(_input(s, p=p, norm_a=norm_a)) for s in radii]
    assert all(b < a for a, b in zip(values, values[1:]))
