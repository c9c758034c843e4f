from fractions import Fraction

import pytest

from motzkin_minors import identities as I
from motzkin_minors.algebra import ONE, X, Y, BiPoly, catalan
from motzkin_minors.identities import (
    ALPHA,
    BETA,
    GAMMA,
    LAMBDA,
    OutOfDomain,
    UnknownIdentity,
    det,
    det2,
    minor_sum_transform,
    motzkin_source,
    verify_alt_det,
    verify_sum_identity,
    verify_thm32,
    verify_thm33,
    verify_thm39,
)


def test_det2_examples():
    assert det2(ONE, BiPoly(), X, ONE) == ONE
    assert det2(5, 4, 14, 14) == 14
    a, b = X + 2, Y**2
    assert det2(a, b, a, b).is_zero()
    assert det2(Fraction(1, 2), 1, 1, 4) == 1


def test_det_routes_agree():
    m = [[2, -1, 0, 3], [1, 4, 2, 0], [0, 5, -3, 1], [7, 0, 1, 1]]
    assert det(m) == I._laplace([row[:] for row in m])
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[1, 2], [2, 4]]) == 0
    poly = [[X, ONE], [ONE, Y]]
    assert det(poly) == X * Y - 1


def test_thm32_examples():
    assert I.minor_sum_lhs(0, 0, 1, 0) == X + Y
    assert verify_thm32(0, 0, 1, 0).passed
    assert I.minor_sum_lhs(1, 1, 0, 0) == X * Y
    assert verify_thm32(1, 1, 0, 0).passed
    assert I.minor_sum_lhs(0, 0, 0, 0) == ONE
    assert verify_thm32(0, 0, 0, 0).passed


def test_thm32_domain():
    with pytest.raises(OutOfDomain):
        verify_thm32(0, 1, 0, 2)
    with pytest.raises(ValueError):
        verify_thm32(0, 0, 0, 0, mode="at-point")


def test_thm32_small_sweep_both_forms():
    for n in range(5):
        for m in range(5):
            for r in range(3):
                assert verify_thm32(n, m, r, 0, summed=True).passed
                for ell in range(m + 1):
                    assert verify_thm32(n, m, r, ell).passed
                    assert verify_thm32(n, m, r, ell, "at-point", (3, -2)).passed


def test_summed_form_needs_all_levels():
    # stopping the level sum at m instead of m + r loses terms once r >= 1
    n, m, r = 1, 1, 1
    partial = sum((I.minor_sum_lhs(n, m, r, ell) for ell in range(m + 1)), BiPoly())
    assert partial != I.thm32_sum_rhs(n, m, r)
    assert I.thm32_sum_lhs(n, m, r) == I.thm32_sum_rhs(n, m, r)


def test_y_plus_one_routes_agree():
    for n in range(10):
        assert I.M_y1y(n, 0) == I.M_y1y_via_bijection(n)


def test_thm33():
    rep = verify_thm33(1, 1, 0)
    assert rep.passed and rep.identity == "eq3.2.1"
    assert verify_thm33(0, 0, 0).passed
    for n in range(9):
        for m in range(9):
            for ell in range(m + 1):
                assert verify_thm33(n, m, ell).passed


def test_thm39():
    assert I.thm39_lhs(0) == 2 * Y
    assert I.thm39_lhs(0, 2) == 4
    for n in range(8):
        assert verify_thm39(n).passed
        assert verify_thm39(n, 3).passed


def test_sum_identity_examples():
    lhs, rhs = I.get_identity("eq3.3.4").check(1)
    assert lhs == rhs == 2
    lhs, rhs = I.get_identity("eq4.2").check(1)
    assert lhs == rhs == 5
    lhs, rhs = I.get_identity("eq4.6").check(2)
    assert lhs == rhs == 6
    lhs, rhs = I.get_identity("deng-yan").check(1)
    assert lhs == rhs == 4
    assert verify_sum_identity("eq4.2", (0,)).passed


def test_sum_identity_errors():
    with pytest.raises(UnknownIdentity):
        verify_sum_identity("eq9.9", (1,))
    with pytest.raises(OutOfDomain):
        verify_sum_identity("eq4.2", (-1,))
    with pytest.raises(OutOfDomain):
        verify_sum_identity("eq3.3.3", (1, 1))
    with pytest.raises(OutOfDomain):
        verify_sum_identity("eq3.3.3", (1, 1, 2))


def test_alt_det_examples():
    rep = verify_alt_det("eq4.1", 1)
    assert rep.passed and I.alt_det_sum((0, 0), 1, 1, True) == 2 == catalan(2)
    assert verify_alt_det("thm45", 0, 1).passed
    assert I.alt_det_sum((2, 2), 0, 1, False) == 1
    assert verify_alt_det("remark46", 1, 1).passed
    assert I.alt_det_sum((1, 1), 1, 1, True) == 1
    with pytest.raises(OutOfDomain):
        verify_alt_det("eq4.1", 2, 2)


def test_motzkin_numbers():
    assert [I.motzkin_number(n) for n in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]


def test_negative_levels_are_swept():
    params = I.get_identity("eq3.7.1").domain(3)
    assert {l for _, l in params if l < 0} == {-1, -2, -3}
    for tag in ("eq3.7.1", "eq3.7.2", "eq3.7.3", "eq3.6.2"):
        assert I.sweep(tag, 6).passed


def test_corollary_agrees_with_minor_sum():
    lhs, rhs = I.SINGLE["eq3.3.4"][:2]
    for n in range(12):
        minor = I.minor_sum_lhs(n, n, 0, 0, (1, 2))
        assert minor == lhs(n) == rhs(n)


def test_registry_sweeps_small():
    for tag in I.identity_tags():
        ident = I.get_identity(tag)
        rep = I.sweep(tag, 4 if ident.symbolic else 10)
        assert rep.passed, (tag, rep.failures[:2])
        assert rep.instances > 0


def test_false_variants_fail():
    false_tags = [t for t in I.identity_tags(True) if t not in I.identity_tags()]
    assert set(false_tags) == {"eq3.3.3-false", "cor3.6c-false", "cor3.10-false"}
    for tag in false_tags:
        assert not I.sweep(tag, 6).passed


def test_specializations():
    assert I.check_specializations(50).passed
    assert not I.check_specializations(10, use_false_forms=True).passed
    n, k = 3, 2
    assert ALPHA(n, k, n, 0) == (2 * k + 2) * (2 * n + 1) * (2 * n + 2)


FAMILIES = [
    (I.eq333_lhs, I.eq333_rhs, ALPHA),
    (I.eq342_lhs, I.eq342_rhs, BETA),
    (I.eq352_lhs, I.eq352_rhs, GAMMA),
    (I.eq362_lhs, I.eq362_rhs, LAMBDA),
]


@pytest.mark.parametrize("lhs,rhs,poly", FAMILIES)
def test_coefficient_mutations_are_caught(lhs, rhs, poly):
    for index in range(len(poly.terms)):
        bad = poly.mutated(index)
        failures = sum(
            1
            for n in range(5)
            for m in range(5)
            for l in range(-1, m + 1)
            if lhs(n, m, l) != rhs(n, m, l, bad)
        )
        assert failures > 0, (poly.name, index)


def test_transform_examples():
    row, total = minor_sum_transform(I.SOURCES["shapiro"], 1, 0, 1, 1, 2)
    assert row == [14, 10, 1] and total == 25
    assert minor_sum_transform(I.SOURCES["pascal"], 1, 0, 1, 1, 3)[1] == 14
    assert minor_sum_transform(I.SOURCES["pascal"], 1, 1, 1, 1, 3)[1] == 14
    with pytest.raises(ValueError):
        minor_sum_transform(I.SOURCES["pascal"], 1, 0, 1, 0, 3)


def test_transform_on_motzkin_matches_minor_sum():
    # (m, r, l, p) = (1, 0, 1, 1) is the adjacent-row 2x2 minor
    A = motzkin_source()
    for n in range(6):
        _, total = minor_sum_transform(A, 1, 0, 1, 1, n)
        direct = sum((det2(I.M(n, k), I.M(n, k + 1), I.M(n + 1, k), I.M(n + 1, k + 1))
                      for k in range(n + 1)), BiPoly())
        assert total == direct


def test_transform_p2_fraction_free_matches_cofactors():
    A = motzkin_source((2, 3))
    for n in range(6):
        for k in range(n + 1):
            mat = [[A(n + i * 2 + j * 1, k + j) for j in range(3)] for i in range(3)]
            assert I._bareiss([r[:] for r in mat]) == I._laplace(mat)
