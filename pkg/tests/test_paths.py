import pytest
from hypothesis import given, strategies as st

from motzkin_minors.algebra import ONE, X, Y, BiPoly
from motzkin_minors.paths import (
    MarkedPath,
    PartialMotzkinPath,
    PathError,
    decompose,
    enumerate_paths,
    heights,
    iter_all_paths,
    path_weight,
    r_visible_ups,
    r_visible_ups_naive,
    recompose,
    reverse_path,
    set_weight,
)

words = st.text(alphabet="UDH", max_size=10)


def test_rejects_negative_height():
    with pytest.raises(PathError):
        PartialMotzkinPath("D")
    with pytest.raises(PathError):
        PartialMotzkinPath("UDD")
    with pytest.raises(PathError):
        PartialMotzkinPath("UX")


def test_path_weight_examples():
    assert path_weight("") == ONE
    assert path_weight("HH") == X**2
    assert path_weight("UHD") == Y
    assert PartialMotzkinPath("HUHD").weight() == X * Y


def test_enumerate_examples():
    assert [p.steps for p in enumerate_paths(0, 0)] == [""]
    assert sorted(p.steps for p in enumerate_paths(2, 0)) == ["HH", "UD"]
    ps = enumerate_paths(3, 1)
    assert len(ps) == 5
    total = sum((p.weight() for p in ps), BiPoly())
    assert total == X**2 + X * Y + Y**2 + 2
    assert enumerate_paths(3, 4) == []
    assert enumerate_paths(3, -1) == []


def test_enumerate_against_all_words():
    # unpruned product over all 3^n words as the oracle
    from itertools import product

    for n in range(8):
        for k in range(n + 1):
            brute = set()
            for w in product("UDH", repeat=n):
                h = heights(w)
                if min(h) >= 0 and h[-1] == k:
                    brute.add("".join(w))
            assert {p.steps for p in enumerate_paths(n, k)} == brute


def test_set_weight_examples():
    assert set_weight(4, 2) == BiPoly.parse("x^2 + 2*x*y + 3*y^2 + 3")
    assert set_weight(1, 1) == ONE
    assert set_weight(4, 1) == BiPoly.parse("x^3 + x^2*y + x*y^2 + y^3 + 3*x + 5*y")


def test_set_weight_counts_paths():
    for n in range(9):
        for k in range(n + 1):
            assert set_weight(n, k).eval(1, 1) == len(enumerate_paths(n, k))


def test_reverse_examples():
    assert reverse_path("UUH") == "HDD"
    assert reverse_path("UHD") == "UHD"


@given(words)
def test_reverse_is_involution(w):
    assert reverse_path(reverse_path(w)) == w


def test_r_visible_examples():
    assert r_visible_ups("UD") == []
    assert r_visible_ups("UU") == [0, 1]
    assert r_visible_ups("UDU") == [2]
    assert r_visible_ups("UUD") == [0]


def test_r_visible_fast_matches_naive():
    for n in range(11):
        for p in iter_all_paths(n):
            assert r_visible_ups(p) == r_visible_ups_naive(p), p


def test_r_visible_count_is_end_height():
    for n in range(13):
        for p in iter_all_paths(n):
            assert len(r_visible_ups(p)) == p.end_height


def test_decompose_examples():
    assert decompose("UU") == ("", "", "")
    assert decompose("HU") == ("H", "")
    assert decompose("UDUH") == ("UD", "H")
    with pytest.raises(PathError):
        decompose("UD")


def test_decompose_round_trip_and_shape():
    for n in range(1, 13):
        for k in range(1, n + 1):
            for p in enumerate_paths(n, k):
                pieces = decompose(p)
                assert recompose(pieces) == p.steps
                assert heights(pieces[0])[-1] == 0
                for piece in pieces[1:]:
                    assert min(heights(piece)) >= 0


def test_marked_path_serialisation():
    mp = MarkedPath(PartialMotzkinPath("HUDH"), {0, 3})
    assert str(mp) == "HUDH|marks=0,3"
    assert MarkedPath.parse("HUDH|marks=0,3") == mp
    assert MarkedPath.parse("UD") == MarkedPath(PartialMotzkinPath("UD"))
    assert mp.weight() == ONE
    assert MarkedPath(PartialMotzkinPath("HUHD"), {0}).weight() == Y


def test_marks_must_be_axis_h_steps():
    with pytest.raises(PathError):
        MarkedPath(PartialMotzkinPath("UHD"), {1})
    with pytest.raises(PathError):
        MarkedPath(PartialMotzkinPath("UD"), {0})
