import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import BracketError, DomainError, NonFiniteError
from special_fn import Bracket, expint_ei, find_root_bracketed, lambert_w0, maximize_bracketed
from special_fn.expint import EULER_GAMMA

INV_E = math.exp(-1.0)


# ---------------- Lambert W ----------------
@pytest.mark.parametrize(
    "x, expected",
    [(0.0, 0.0), (math.e, 1.0), (INV_E, 0.2784645427610738), (1.0, 0.5671432904097838)],
)
def test_lambert_reference_values(x, expected):
    assert lambert_w0(x) == pytest.approx(expected, rel=1e-14, abs=1e-15)


def test_lambert_branch_point_is_exact():
    assert lambert_w0(-INV_E) == -1.0


def test_lambert_rejects_points_below_branch():
    with pytest.raises(DomainError):
        lambert_w0(-0.4)
    with pytest.raises(DomainError):
        lambert_w0(math.nan)


@pytest.mark.parametrize("x", [-0.3, -0.1, 1e-8, 0.5, 10.0, 1e3, 1e6])
def test_lambert_matches_mpmath(x):
    with mpmath.workdps(40):
        expected = float(mpmath.lambertw(mpmath.mpf(x)).real)
    assert lambert_w0(x) == pytest.approx(expected, rel=1e-13, abs=1e-15)


@pytest.mark.parametrize("offset", [1e-12, 1e-9, 1e-6])
def test_lambert_near_branch_point(offset):
    # W is ill-conditioned here: dW/dx blows up like 1/sqrt(x + 1/e).
    x = -INV_E + offset
    with mpmath.workdps(40):
        expected = float(mpmath.lambertw(mpmath.mpf(x)).real)
    assert lambert_w0(x) == pytest.approx(expected, abs=1e-9)


@given(st.floats(min_value=-INV_E + 1e-10, max_value=1e6).filter(lambda x: x == 0.0 or abs(x) > 1e-300))
@settings(max_examples=500)
def test_lambert_round_trip(x):
    w = lambert_w0(x)
    assert abs(w * math.exp(w) - x) <= 1e-14 * abs(x)


@given(
    st.floats(min_value=-INV_E, max_value=100.0),
    st.floats(min_value=-INV_E, max_value=100.0),
)
@settings(max_examples=300)
def test_lambert_is_monotone(a, b):
    lo, hi = sorted((a, b))
    assert lambert_w0(lo) <= lambert_w0(hi) + 1e-15 * (1.0 + abs(lambert_w0(hi)))


# ---------------- Ei ----------------
def test_ei_at_one():
    with mpmath.workdps(30):
        expected = float(mpmath.ei(1))
    assert expint_ei(1.0) == pytest.approx(expected, abs=1e-12)
    assert expint_ei(1.0) == pytest.approx(1.8951178, abs=1e-7)


@given(st.floats(min_value=1e-3, max_value=20.0))
@settings(max_examples=200)
def test_ei_matches_mpmath(x):
    with mpmath.workdps(30):
        expected = float(mpmath.ei(x))
    assert expint_ei(x) == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_ei_small_argument_asymptotics():
    x = 1e-6
    assert expint_ei(x) - math.log(x) - EULER_GAMMA == pytest.approx(x, rel=1e-5)


def test_ei_truncation_is_stable():
    assert abs(expint_ei(0.5, terms=30) - expint_ei(0.5, terms=60)) <= 1e-15


@pytest.mark.parametrize("x", [0.0, -1.0, math.inf])
def test_ei_domain(x):
    with pytest.raises(DomainError):
        expint_ei(x)


# ---------------- solvers ----------------
def test_bracket_validation():
    with pytest.raises(DomainError):
        Bracket(2.0, 1.0)
    with pytest.raises(DomainError):
        Bracket(0.0, math.inf)
    assert Bracket(1.0, 3.0).midpoint == 2.0


def test_maximize_quadratic():
    report = maximize_bracketed(lambda r: -((r - 3.0) ** 2), Bracket(0.0, 10.0), 1e-10)
    assert report.argument == pytest.approx(3.0, abs=1e-6)
    assert report.value == pytest.approx(0.0, abs=1e-12)
    assert report.width_at_stop <= 1e-10


def test_maximize_zero_order_profile():
    report = maximize_bracketed(lambda r: math.log1p(r) / math.sqrt(r), Bracket(0.01, 100.0), 1e-12)
    assert report.argument == pytest.approx(3.9216, abs=1e-3)
    assert report.value == pytest.approx(0.80474, abs=1e-5)


def test_maximize_constant_function():
    report = maximize_bracketed(lambda r: 7.0, Bracket(-1.0, 1.0))
    assert report.value == 7.0
    assert -1.0 < report.argument < 1.0


def test_maximize_rejects_non_finite_objective():
    with pytest.raises(NonFiniteError):
        maximize_bracketed(lambda r: math.nan, Bracket(0.0, 1.0))


def test_root_sqrt_two():
    assert find_root_bracketed(lambda x: x * x - 2.0, Bracket(1.0, 2.0), 1e-12) == pytest.approx(
        math.sqrt(2.0), abs=1e-12
    )


def test_root_of_limit_function():
    root = find_root_bracketed(lambda x: math.exp(x) / x - expint_ei(x), Bracket(0.5, 3.0), 1e-12)
    assert root == pytest.approx(1.3472, abs=5e-4)
    assert 1.0 / root == pytest.approx(0.7423, abs=5e-4)


def test_root_near_lambert_branch_point():
    c = -INV_E + 1e-12
    root = find_root_bracketed(lambda w: w * math.exp(w) - c, Bracket(-1.0, 0.0), 1e-14)
    assert root == pytest.approx(-1.0, abs=1e-5)
    assert root == pytest.approx(lambert_w0(c), abs=1e-6)


def test_root_requires_sign_change():
    with pytest.raises(BracketError):
        find_root_bracketed(lambda x: x * x + 1.0, Bracket(-1.0, 1.0))
