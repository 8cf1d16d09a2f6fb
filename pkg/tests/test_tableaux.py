import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from odd_linkage import (
    DomainError,
    MultiIndex,
    SkewDiagram,
    Tableau,
    Weight,
    content,
    enumerate_admissible,
    enumerate_marked,
    is_polynomial,
    leading_label,
    normalize_target,
    reading_word,
    skew_shapes_from,
)
from odd_linkage.orders import clausen_key
from odd_linkage.tableaux import DISTINCT, GENERAL, orbit_labels
from strategies import random_robust
from golden import TIED_ROWS

lab = MultiIndex.parse
TIED = Weight((4, 4, 2), (3, 2, 1))  # plus_1 = plus_2 > plus_3


def test_horizontal_strip_for_distinct_rows():
    w = Weight((5, 4, 3), (3, 2, 1))
    Dp, Dm = skew_shapes_from(w, lab("123|123"))
    assert Dp.cells == {(5, 1), (4, 2), (3, 3)}
    assert Dm.cells == {(1, 4), (2, 3), (3, 2)}


def test_formal_difference_example():
    w = Weight((5, 4, 3), (3, 2, 1))
    with pytest.raises(DomainError):
        skew_shapes_from(w, lab("113|123"))
    Dp, _ = skew_shapes_from(w, lab("113|123"), check=False)
    assert Dp.cells == {(5, 1), (4, 1), (3, 3)}


def test_empty_pair():
    Dp, Dm = skew_shapes_from(Weight((2, 1), (1, 0)), MultiIndex((), ()))
    assert len(Dp) == len(Dm) == 0


def test_non_polynomial_rejected():
    with pytest.raises(DomainError):
        skew_shapes_from(Weight((2, 1, 0), (0, -1, -2)), lab("123|123"))


def test_tied_example_three_tableaux():
    Dp, _ = skew_shapes_from(TIED, lab("123|123"))
    tabs = enumerate_marked(Dp, (1, 2, 3), TIED)
    assert len(tabs) == 3
    assert all(T.is_semistandard() for T in tabs)
    # each tableau's orbit is the support of one printed row vector, and the orbits are disjoint
    orbits = [set(map(str, orbit_labels(T, TIED))) for T in tabs]
    assert orbits == [set(r) for r in TIED_ROWS]
    for a, b in itertools.combinations(orbits, 2):
        assert not a & b
    assert [str(leading_label(T, TIED)) for T in tabs] == ["123|213", "123|312", "123|321"]


def test_repeated_j_single_tableau():
    w = Weight((3, 2, 1), (3, 0, 0))
    Dp, _ = skew_shapes_from(w, lab("123|111"))
    assert len(enumerate_marked(Dp, (1, 1, 1), w)) == 1


def test_single_cell():
    D = SkewDiagram({(1, 1)})
    assert len(enumerate_marked(D, (2,))) == 1
    with pytest.raises(DomainError):
        enumerate_marked(D, (1, 2))


def test_readings_single_row():
    D = SkewDiagram({(1, 1), (1, 2), (1, 3)})
    T = Tableau.of(D, {(1, 1): 1, (1, 2): 2, (1, 3): 3})
    Ig, Jg = reading_word(T, GENERAL)
    Id, Jd = reading_word(T, DISTINCT)
    assert Jg == Jd[::-1] and Ig == Id[::-1]
    with pytest.raises(DomainError):
        reading_word(T, "diagonal")


def test_second_example_reading():
    w = Weight((6, 4, 3), (3, 2, 1))
    IJ = lab("113|123")
    Dp, _ = skew_shapes_from(w, IJ)
    tabs = enumerate_marked(Dp, IJ.J, w)
    for mode in (GENERAL, DISTINCT):
        readings = [reading_word(T, mode) for T in tabs]
        assert len({I0 for I0, _ in readings}) == 1
        labels = {normalize_target(MultiIndex(I0, J))[1] for I0, J in readings}
        assert labels == set(enumerate_admissible(content(IJ)))
    assert lab("113|123") in {normalize_target(MultiIndex(*reading_word(T)))[1] for T in tabs}


def test_minus_filter():
    # minus_2 = minus_3: symbols 2 and 3 share a minus column
    w = Weight((5, 4, 3), (3, 1, 1))
    Dp, _ = skew_shapes_from(w, lab("12|23"))
    free = enumerate_marked(Dp, (2, 3), w, minus_filter=False)
    kept = enumerate_marked(Dp, (2, 3), w)
    assert len(free) == 2 and len(kept) == 1
    f = dict(kept[0].filling)
    col = {s: c for (_r, c), s in f.items()}
    assert col[2] > col[3]


def test_output_in_clausen_order_and_render():
    Dp, _ = skew_shapes_from(TIED, lab("123|123"))
    tabs = enumerate_marked(Dp, (1, 2, 3), TIED)
    keys = [clausen_key(T) for T in tabs]
    assert keys == sorted(keys)
    assert "6" in tabs[0].render()
    assert tabs[0].to_json()[0].keys() == {"row", "col", "j"}


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_robust_counts_and_readings(seed):
    rng = random.Random(seed)
    w, IJ = random_robust(rng)
    mu = w + content(IJ, w.m, w.n)
    if not (is_polynomial(w) and is_polynomial(mu)):
        return
    Dp, _ = skew_shapes_from(w, IJ)
    tabs = enumerate_marked(Dp, IJ.J, w)
    adm = enumerate_admissible(content(IJ, w.m, w.n))
    assert len(tabs) == len(adm)
    for mode in (GENERAL, DISTINCT):
        readings = [reading_word(T, mode) for T in tabs]
        assert len({I0 for I0, _ in readings}) == 1
        labels = [normalize_target(MultiIndex(I0, J)) for I0, J in readings]
        assert None not in labels
        assert {x[1] for x in labels} == set(adm)
