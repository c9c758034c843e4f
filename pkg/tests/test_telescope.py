from fractions import Fraction

import pytest

from motzkin_minors.algebra import X, Y, binomial
from motzkin_minors.telescope import (
    CERTIFICATES,
    FALSE_CERTIFICATES,
    SUMMANDS,
    Lead,
    binomial_lead,
    certificate_dual_eval,
    constant_sum_check,
    g_value,
    get_certificate,
    poly_lead,
    summand_agreement,
    wz_check,
)

PAIRS = [(f"F{i}", f"R{i}") for i in range(1, 6)]


@pytest.mark.parametrize("f,r", PAIRS)
def test_wz_pairs(f, r):
    rep = wz_check(SUMMANDS[f], CERTIFICATES[r], 40)
    assert rep.passed, rep.failures[:3]
    assert not rep.singular


@pytest.mark.parametrize("f", sorted(SUMMANDS))
def test_constant_sum(f):
    assert constant_sum_check(SUMMANDS[f], 40).passed
    assert summand_agreement(SUMMANDS[f], 25).passed


def test_wz_f3_to_50():
    assert wz_check(SUMMANDS["F3"], CERTIFICATES["R3"], 50).passed


def test_single_point_f1():
    F, R = SUMMANDS["F1"], CERTIFICATES["R1"]
    m, j = 1, 1
    lhs = F(m + 1, j) - F(m, j)
    rhs = g_value(F, R, m, j + 1) - g_value(F, R, m, j)
    assert lhs == rhs
    # by hand: F(2,1) = -(16/36) * 6^2 / 10, F(1,1) = -(16/16) * 1 / 3
    assert F(2, 1) == Fraction(-8, 5) and F(1, 1) == Fraction(-1, 3)


def test_constant_sum_examples():
    F1 = SUMMANDS["F1"]
    assert F1.direct(1, 0) + F1.direct(1, 1) == 1
    assert 4 * binomial(4, 1) ** 2 // 16 - 16 * binomial(4, 0) ** 2 // 16 == binomial(3, 1)
    assert SUMMANDS["F5"].direct(0, 0) == 1
    assert SUMMANDS["F2"].direct(0, 0) == 1


def test_mismatched_certificate_fails():
    assert not wz_check(SUMMANDS["F4"], CERTIFICATES["R5"], 10).passed
    assert not wz_check(SUMMANDS["F5"], FALSE_CERTIFICATES["R5-false"], 10).passed
    assert get_certificate("R5-false") is FALSE_CERTIFICATES["R5-false"]


def test_upper_boundary_limit_is_finite_and_nonzero():
    # the pole of R meets the zero of F just past the summation range
    F, R = SUMMANDS["F1"], CERTIFICATES["R1"]
    for m in range(1, 6):
        assert g_value(F, R, m, m + 1) != 0
        assert g_value(F, R, m, m + 2) == 0
        assert g_value(F, R, m, 0) == 0


def test_lead_helpers():
    assert poly_lead(Y - X, 3, 3) == Lead(1, Fraction(1))
    assert poly_lead((Y - X) ** 2 + 0 * Y, 3, 3) == Lead(2, Fraction(1))
    assert poly_lead(Y + 1, 0, 2) == Lead(0, Fraction(3))
    # binom(4, j) near j = 5 vanishes to first order
    assert binomial_lead(4 + 0 * X, Y, 0, 5).order == 1
    assert binomial_lead(4 + 0 * X, Y, 0, 2) == Lead(0, Fraction(6))


@pytest.mark.parametrize("r", sorted(CERTIFICATES))
def test_certificate_dual_evaluation(r):
    assert certificate_dual_eval(CERTIFICATES[r], points=2000).passed


def test_wz_rejects_bad_bound():
    with pytest.raises(ValueError):
        wz_check(SUMMANDS["F1"], CERTIFICATES["R1"], 0)
