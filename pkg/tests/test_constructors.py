from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from lgg import (
    gabriel_graph,
    gen_ladder,
    gen_ladder_augmented,
    gen_ladder_augmented_lgg,
    gen_random_points,
    gen_unit_distance_grid,
    verify_lgg,
)
from lgg.constructors import ladder_min_width, ladder_rungs
from lgg.errors import BadParameter
from lgg.geometry import in_closed_diametral_disk, squared_distance
from lgg.graph import point_set


def _brute_gabriel(points):
    n = len(points)
    return sorted(
        (a, b)
        for a, b in combinations(range(n), 2)
        if not any(in_closed_diametral_disk(points[a], points[b], points[w]) for w in range(n) if w not in (a, b))
    )


def test_gabriel_collinear():
    assert gabriel_graph(point_set([(0, 0), (1, 0), (2, 0)])).edge_pairs() == [(0, 1), (1, 2)]


def test_gabriel_square_has_no_diagonals():
    g = gabriel_graph(point_set([(0, 0), (1, 0), (1, 1), (0, 1)]))
    assert sorted(g.edge_pairs()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_gabriel_two_points():
    assert gabriel_graph(point_set([(0, 0), ("1/3", 5)])).edge_pairs() == [(0, 1)]


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=40), st.integers(min_value=0, max_value=10**6), st.sampled_from([4, 30, 10**6]))
def test_gabriel_methods_match_definition(n, seed, resolution):
    n = min(n, (resolution + 1) ** 2)
    pts = gen_random_points(n, seed=seed, resolution=resolution)
    expected = _brute_gabriel(pts)
    assert sorted(gabriel_graph(pts).edge_pairs()) == expected
    assert sorted(gabriel_graph(pts, method="delaunay").edge_pairs()) == expected


def test_gabriel_huge_coordinates_use_exact_path():
    pts = point_set([(0, 0), (2 * 10**40, 0), (10**40, 10**40), (10**40, 10**40 + 1)])
    assert sorted(gabriel_graph(pts).edge_pairs()) == _brute_gabriel(pts)


def test_ladder_small():
    pts = gen_ladder(4)
    assert ladder_min_width(4) == Fraction(13, 8)
    assert {p.y for p in pts} == {0, Fraction(1, 2)}
    assert [pts[0].x, pts[1].x] == [0, Fraction(13, 8)]
    assert [pts[2].x, pts[3].x] == [Fraction(1, 4), Fraction(11, 8)]


def test_ladder_sixteen():
    pts = gen_ladder(16)
    ys = sorted({p.y for p in pts})
    assert len(ys) == 8
    assert {b - a for a, b in zip(ys, ys[1:])} == {Fraction(1, 4)}
    assert ladder_min_width(16) == Fraction(49, 32) == pts[1].x


@pytest.mark.parametrize("n", [6, 3, 2, 9, 0])
def test_ladder_rejects_bad_sizes(n):
    with pytest.raises(BadParameter):
        gen_ladder(n)


def test_ladder_rejects_narrow_width():
    with pytest.raises(BadParameter):
        gen_ladder(4, "3/2")
    assert gen_ladder(4, 5)[1].x == 5


@pytest.mark.parametrize("n", [4, 16, 36, 64, 100])
def test_ladder_chain_spacing_scales_like_inverse_sqrt(n):
    pts = gen_ladder(n)
    for i in range(n // 2 - 1):
        for side in (0, 1):
            d2 = squared_distance(pts[2 * i + side], pts[2 * i + 2 + side])
            # 1/sqrt(n) <= d <= 2/sqrt(n), compared on squares
            assert Fraction(1, n) <= d2 <= Fraction(4, n)


@pytest.mark.parametrize("n, count", [(4, 6), (16, 30)])
def test_augmented_ladder_counts(n, count):
    assert len(gen_ladder_augmented(n)) == count


def test_augmented_points_sit_on_gap_circles():
    n = 16
    pts = gen_ladder_augmented(n)
    extra = list(pts)[n:]
    gaps = [(2 * i + side, 2 * i + 2 + side) for i in range(n // 2 - 1) for side in (0, 1)]
    for (a, b), p in zip(gaps, extra):
        assert in_closed_diametral_disk(pts[a], pts[b], p)
        mid_x, mid_y = (pts[a].x + pts[b].x) / 2, (pts[a].y + pts[b].y) / 2
        assert (p.x - mid_x) ** 2 + (p.y - mid_y) ** 2 == squared_distance(pts[a], pts[b]) / 4


@pytest.mark.parametrize("n", [4, 16, 36])
def test_augmented_witness_is_valid(n):
    g, dotted = gen_ladder_augmented_lgg(n)
    assert verify_lgg(g).valid
    assert all(g.has_edge(a, b) for a, b in ladder_rungs(n))
    assert dotted and all(i < g.m for i in dotted)


@pytest.mark.parametrize("rows, cols, m", [(2, 2, 4), (1, 5, 4), (3, 4, 17)])
def test_unit_grid(rows, cols, m):
    g = gen_unit_distance_grid(rows, cols)
    assert g.n == rows * cols and g.m == m
    assert verify_lgg(g).valid
    assert {squared_distance(g.points[e.a], g.points[e.b]) for e in g.edges} == {1}


def test_unit_grid_large_is_valid():
    assert verify_lgg(gen_unit_distance_grid(100, 100)).valid


def test_random_points():
    assert len(gen_random_points(1)) == 1
    assert gen_random_points(40, seed=5) == gen_random_points(40, seed=5)
    assert gen_random_points(40, seed=5) != gen_random_points(40, seed=6)
    pts = gen_random_points(50, seed=1, bounding_box=((-2, 3), ("1/2", 4)))
    assert all(-2 <= p.x <= Fraction(1, 2) and 3 <= p.y <= 4 for p in pts)
    with pytest.raises(BadParameter):
        gen_random_points(0)
    with pytest.raises(BadParameter):
        gen_random_points(5, bounding_box=((0, 0), (0, 1)))
