import pytest
from hypothesis import given, strategies as st

from motzkin_minors.algebra import ONE, X, Y, catalan
from motzkin_minors.series import (
    SeriesOrderError,
    TruncatedSeries,
    catalan_power_coeff,
    catalan_power_series,
    catalan_series,
    iterate_quadratic,
    series_from_column,
    series_mul,
    series_pow,
    series_substitute_y_for_x,
    verify_catalan_powers,
    verify_functional_equation,
    verify_riordan,
)

int_series = st.lists(st.integers(-20, 20), min_size=8, max_size=8).map(
    lambda cs: TruncatedSeries(cs, zero=0)
)


def test_functional_equation():
    assert verify_functional_equation(10).passed
    assert verify_functional_equation(1).passed


def test_functional_equation_negative_control():
    m0 = series_from_column(0, 10)
    coeffs = list(m0.coeffs)
    coeffs[6] = coeffs[6] + X
    rep = verify_functional_equation(10, TruncatedSeries(coeffs))
    assert not rep.passed
    assert rep.first_failure == 6


def test_riordan():
    assert verify_riordan(10, 5).passed
    assert verify_riordan(10, 0).passed


def test_riordan_k1_t2_coefficient():
    m0 = series_from_column(0, 2)
    f = series_substitute_y_for_x(m0).shift(1)
    rhs = series_mul(m0, f)
    assert rhs[2] == X + Y
    assert series_from_column(1, 2)[2] == X + Y


def test_column_zero_at_catalan_point():
    s = series_from_column(0, 20)
    assert [s[n].eval(1, 2) for n in range(21)] == [catalan(n) for n in range(21)]


def test_quadratic_iteration_matches_column():
    direct = series_substitute_y_for_x(series_from_column(0, 15))
    assert iterate_quadratic(15) == direct


def test_catalan_series_is_catalan():
    assert list(catalan_series(15).coeffs) == [catalan(n) for n in range(16)]


def test_catalan_power_examples():
    assert catalan_power_coeff(1, 3) == 5
    assert catalan_power_coeff(3, 2) == 9
    assert catalan_power_series(3, 4)[2] == 9
    assert catalan_power_coeff(1, 2, sqrt_variant=True) == 10
    with pytest.raises(ValueError):
        catalan_power_coeff(0, 2)


def test_catalan_powers_sweep():
    assert verify_catalan_powers(12, 12).passed


def test_order_mismatch():
    with pytest.raises(SeriesOrderError):
        TruncatedSeries([1, 2], zero=0) + TruncatedSeries([1, 2, 3], zero=0)


def test_series_pow_zero():
    s = TruncatedSeries([ONE, X], order=3)
    assert series_pow(s, 0) == TruncatedSeries([ONE], order=3)


@given(int_series, int_series, int_series)
def test_mul_commutative_associative(a, b, c):
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
