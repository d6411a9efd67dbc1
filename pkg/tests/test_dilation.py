import math
import random
from itertools import combinations

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from lgg import (
    build_graph,
    complete_graph,
    decision_dilation,
    dilation,
    dilation_pair,
    gabriel_graph,
    gen_ladder,
    gen_random_points,
    min_dilation_lgg,
    verify_lgg,
)
from lgg.dilation import MAX_WIDTH, Stretch
from lgg.errors import IndexOutOfRange, SamePair, TooFewVertices, TooManyPoints
from lgg.graph import point_set
from lgg.oracles import brute_force_min_dilation

from corpus import random_graph

SQUARE = point_set([(0, 0), (1, 0), (1, 1), (0, 1)])
SIDES = [(0, 1), (1, 2), (2, 3), (0, 3)]
LINE = point_set([(0, 0), (1, 0), (2, 0)])
ACUTE = point_set([(0, 0), (4, 0), (2, 3)])
with mpmath.workprec(300):
    # reference value sharper than the certified intervals
    SQRT2 = mpmath.sqrt(2)


def test_path_on_a_line():
    rep = dilation(build_graph(LINE, [(0, 1), (1, 2)]))
    assert rep.value.contains(1)


def test_square_sides():
    rep = dilation(build_graph(SQUARE, SIDES))
    assert rep.value.contains(SQRT2) and rep.value.width <= MAX_WIDTH
    assert set(rep.witness_pair) in ({0, 2}, {1, 3})


def test_square_missing_side():
    rep = dilation(build_graph(SQUARE, SIDES[1:]))
    assert rep.value.contains(3)
    assert set(rep.witness_pair) == {0, 1}


def test_disconnected_is_infinite():
    rep = dilation(build_graph(SQUARE, [(0, 1), (2, 3)]))
    assert rep.value.is_infinite
    a, b = rep.witness_pair
    assert {a, b} & {0, 1} and {a, b} & {2, 3}


def test_pairs():
    g = build_graph(SQUARE, SIDES)
    assert dilation_pair(g, 0, 1).contains(1)
    assert dilation_pair(g, 0, 2).contains(SQRT2)
    assert dilation_pair(build_graph(SQUARE, [(0, 1)]), 0, 3).is_infinite
    with pytest.raises(SamePair):
        dilation_pair(g, 2, 2)
    with pytest.raises(IndexOutOfRange):
        dilation_pair(g, 0, 4)
    with pytest.raises(TooFewVertices):
        dilation(build_graph(point_set([(0, 0)]), []))


def test_per_pair_table():
    rep = dilation(build_graph(SQUARE, SIDES), per_pair=True)
    assert len(rep.per_pair) == 6
    assert rep.per_pair[(0, 2)].contains(SQRT2) and rep.per_pair[(0, 1)].contains(1)


def test_complete_graph_has_dilation_one():
    assert dilation(complete_graph(gen_random_points(12, seed=4))).value.contains(1)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_edge_insertion_never_increases_dilation(seed):
    g = random_graph(seed, max_n=10)
    missing = [p for p in combinations(range(g.n), 2) if not g.has_edge(*p)]
    if not missing:
        return
    extra = random.Random(seed).choice(missing)
    before = dilation(g).value
    after = dilation(build_graph(g.points, g.edge_pairs() + [extra])).value
    assert after.is_infinite is False or before.is_infinite
    if not before.is_infinite:
        assert after.lo <= before.hi
    if not after.is_infinite:
        assert after.lo >= 1 - MAX_WIDTH


def test_gabriel_dilation_grows_no_faster_than_sqrt_n():
    def normalized(n):
        return float(dilation(gabriel_graph(gen_random_points(n, seed=n))).value) / math.sqrt(n)

    base = normalized(50)
    assert normalized(100) <= 1.5 * base
    assert normalized(200) <= 1.5 * base


def test_min_dilation_acute_triangle():
    res = min_dilation_lgg(ACUTE)
    assert res.best.m == 3 and res.dilation.contains(1)
    assert decision_dilation(ACUTE, 1)


def test_min_dilation_collinear():
    res = min_dilation_lgg(LINE)
    assert res.best.edge_pairs() == [(0, 1), (1, 2)]
    assert res.dilation.contains(1)


def test_min_dilation_ladder_matches_oracle():
    pts = gen_ladder(4)
    res = min_dilation_lgg(pts)
    assert verify_lgg(res.best).valid
    assert res.dilation.overlaps(brute_force_min_dilation(pts))
    assert not decision_dilation(pts, 1)
    assert decision_dilation(pts, math.inf)
    assert decision_dilation(pts, "7/5")


@pytest.mark.parametrize("seed", range(8))
def test_branch_and_bound_matches_enumeration(seed):
    pts = gen_random_points(5 + seed % 4, seed=100 + seed, resolution=8 if seed % 2 else 1000)
    a = min_dilation_lgg(pts)
    b = min_dilation_lgg(pts, method="bnb")
    assert verify_lgg(b.best).valid
    assert a.dilation.overlaps(b.dilation)


def test_min_dilation_limits():
    with pytest.raises(TooManyPoints):
        min_dilation_lgg(gen_random_points(13))
    with pytest.raises(TooFewVertices):
        min_dilation_lgg(point_set([(0, 0)]))


def test_stretch_interval():
    s = Stretch(mpmath.mpf(1), mpmath.mpf(2))
    assert s.contains(1.5) and not s.contains(3)
    assert s.certainly_below(Stretch(mpmath.mpf(3), mpmath.mpf(4)))
    assert s.overlaps(Stretch(mpmath.mpf(2), mpmath.mpf(5)))
    assert Stretch.infinite().is_infinite and Stretch.infinite().contains(math.inf)
