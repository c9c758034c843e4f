import pytest

from motzkin_minors.algebra import Y
from motzkin_minors.bijections import (
    DomainError,
    PathPair,
    check_lemma31,
    check_phi,
    check_thm41,
    in_A,
    in_B,
    in_C,
    lemma31_backward,
    lemma31_forward,
    phi_backward,
    phi_forward,
    set_A,
    thm41_pairing,
    thm41_unpair,
)
from motzkin_minors.paths import MarkedPath, PartialMotzkinPath, enumerate_paths, path_weight


def marked(steps, marks=()):
    return MarkedPath(PartialMotzkinPath(steps), frozenset(marks))


def test_lemma31_forward_examples():
    p = lemma31_forward(marked("HH", {0, 1}))
    assert p.steps == "UU" and p.end_height == 2
    assert lemma31_forward(marked("UD")).steps == "UD"
    p = lemma31_forward(marked("HUD", {0}))
    assert p.steps == "UUD" and p.end_height == 1


def test_lemma31_backward_examples():
    assert lemma31_backward("UU") == marked("HH", {0, 1})
    assert lemma31_backward("UD") == marked("UD")
    assert lemma31_backward("UUD") == marked("HUD", {0})


def test_lemma31_rejects_paths_off_axis():
    with pytest.raises(DomainError):
        lemma31_forward(marked("HU", {0}))


def test_lemma31_exhaustive():
    rep = check_lemma31(8)
    assert rep.passed, rep.failures[:3]
    assert rep.checked > 0


def test_phi_round_trip_small():
    rep = check_phi(3, max_r=2, max_ell=2)
    assert rep.passed, rep.failures[:3]


def test_phi_hand_example():
    # n = m = 0, r = 1, l = 0: Q of length 2 ending at 1
    pairs = list(set_A(0, 0, 1, 0))
    assert {p.Q for p in pairs} == {"UH", "HU"}
    assert all(in_C(p) for p in pairs)
    # r = 0, n = 1, m = 1: pairs outside C map into B and back
    for pair in set_A(1, 1, 0, 0):
        if in_C(pair):
            continue
        image = phi_forward(pair)
        assert in_B(image)
        assert phi_backward(image) == pair
        assert image.weight() == pair.weight()


def test_phi_rejects_pairs_in_c():
    pair = PathPair("", "HU", 0, 0, 1, 0)
    assert in_A(pair) and in_C(pair)
    with pytest.raises(DomainError):
        phi_forward(pair)
    with pytest.raises(DomainError):
        phi_backward(pair)


def test_phi_preserves_weight_degrees():
    for pair in set_A(2, 3, 1, 1):
        if in_C(pair):
            continue
        out = phi_forward(pair)
        a, b = pair.weight(), out.weight()
        assert (a.degree_x(), a.degree_y()) == (b.degree_x(), b.degree_y())


def test_thm41_examples():
    assert thm41_pairing("U", "U").steps == "UD"
    with pytest.raises(DomainError):
        thm41_pairing("U", "H")
    with pytest.raises(DomainError):
        thm41_pairing("U", "UD")
    P, Q = PartialMotzkinPath("UH"), PartialMotzkinPath("HU")
    assert thm41_unpair(thm41_pairing(P, Q)) == (P, Q)


def test_thm41_count_m2():
    pairs = sum(len(enumerate_paths(2, j)) ** 2 for j in range(3))
    assert pairs == 9 == len(enumerate_paths(4, 0))


def test_thm41_exhaustive():
    rep = check_thm41(5)
    assert rep.passed, rep.failures[:3]


def test_forward_weight_matches_y_substitution():
    for mp in [marked("HUHDH", {0, 4}), marked("HHH", {1})]:
        assert path_weight(lemma31_forward(mp)).substitute(x=Y) == mp.weight()
