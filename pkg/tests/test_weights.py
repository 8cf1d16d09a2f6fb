import pytest
from hypothesis import given
from hypothesis import strategies as st

from odd_linkage import (
    ContentVector,
    DomainError,
    MultiIndex,
    ParseError,
    Weight,
    content,
    ell_stats,
    is_dominant,
    is_hook_pair,
    is_polynomial,
    omega,
    shift,
)
from strategies import weight_and_index, weights

W543 = Weight((5, 4, 3), (3, 2, 1))
W210 = Weight((2, 1, 0), (0, -1, -2))


def omega_oracle(w, i, j):
    return w.plus[i - 1] + w.minus[j - 1] + w.m + 1 - i - j


def test_omega_values():
    assert omega(W543, 2, 1) == 8
    assert omega(Weight([0], [0]), 1, 1) == 0
    for a, b in [(0, 0), (7, -3), (-2, 5)]:
        assert omega(Weight((9, 9, a), (9, 9, b)), 3, 3) == a + b - 2


@pytest.mark.parametrize("i,j", [(0, 1), (4, 1), (1, 0), (1, 4)])
def test_omega_out_of_range(i, j):
    with pytest.raises(DomainError):
        omega(W543, i, j)


def test_shift_single_pair():
    assert shift(W543, MultiIndex([2], [3])) == Weight((5, 3, 3), (3, 2, 2))


def test_shift_out_of_range():
    with pytest.raises(DomainError):
        shift(W543, MultiIndex([4], [1]))


def test_content_examples():
    assert content(MultiIndex.parse("113|123"), 3, 3) == ContentVector((-2, 0, -1), (1, 1, 1))
    assert content(MultiIndex.parse("123|111"), 3, 3) == ContentVector((-1, -1, -1), (3, 0, 0))
    assert content(MultiIndex((), ()), 2, 2) == ContentVector((0, 0), (0, 0))


def test_content_vector_invariants():
    with pytest.raises(DomainError):
        ContentVector((1,), (-1,))
    with pytest.raises(DomainError):
        ContentVector((-1,), (2,))


def test_predicates():
    assert is_dominant(W543) and is_polynomial(W543) and is_hook_pair(W543)
    zero = Weight((0, 0, 0), (0, 0, 0))
    assert is_dominant(zero) and is_polynomial(zero) and is_hook_pair(zero)
    assert is_dominant(W210) and not is_polynomial(W210)
    assert not is_dominant(Weight((1, 2), (0,)))
    # plus_m = 1 covers one nonzero minus part but not two
    assert is_hook_pair(Weight((3, 1), (2, 0)))
    assert not is_hook_pair(Weight((3, 1), (2, 1)))


def test_ell_stats():
    assert ell_stats(W543) == (12, 6, 18)
    assert ell_stats(Weight((0,), (0,))) == (0, 0, 0)


def test_parse_and_json():
    w = Weight.parse("2,1,0|0,-1,-2")
    assert w == W210 and str(w) == "2,1,0|0,-1,-2"
    assert Weight.from_json(w.to_json()) == w
    assert w.to_json() == {"m": 3, "n": 3, "plus": [2, 1, 0], "minus": [0, -1, -2]}
    with pytest.raises(ParseError):
        Weight.parse("1,2")
    with pytest.raises(ParseError):
        Weight.parse("a|1")
    with pytest.raises(DomainError):
        Weight.from_json({"m": 2, "n": 1, "plus": [1], "minus": [0]})


def test_empty_side_rejected():
    with pytest.raises(DomainError):
        Weight((), (1,))


@given(weight_and_index())
def test_shift_is_weight_plus_content(data):
    w, IJ = data
    assert shift(w, IJ) == w + content(IJ, w.m, w.n)


@given(weights(), st.data())
def test_omega_invariant_under_own_shift(w, data):
    i = data.draw(st.integers(1, w.m))
    j = data.draw(st.integers(1, w.n))
    assert omega(shift(w, MultiIndex([i], [j])), i, j) == omega(w, i, j) == omega_oracle(w, i, j)


@given(weight_and_index())
def test_ell_bookkeeping(data):
    w, IJ = data
    p0, m0, t0 = ell_stats(w)
    p1, m1, t1 = ell_stats(shift(w, IJ))
    assert (p1 - p0, m1 - m0, t1 - t0) == (-IJ.k, IJ.k, 0)


@given(weights())
def test_polynomial_implies_dominant(w):
    assert not is_polynomial(w) or is_dominant(w)
    assert not is_hook_pair(w) or is_polynomial(w)


@given(weights())
def test_weight_json_round_trip(w):
    assert Weight.from_json(w.to_json()) == w
    assert Weight.parse(str(w)) == w
