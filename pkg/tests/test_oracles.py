import mpmath
import pytest

from lgg import ConflictGraph, build_conflict_graph, build_graph, min_dilation_lgg
from lgg.errors import TooLarge
from lgg.graph import point_set
from lgg.oracles import brute_force_lgg_valid, brute_force_min_dilation, brute_force_mwis, brute_force_sat
from lgg.reduction import CnfFormula, random_3sat

SQUARE = point_set([(0, 0), (1, 0), (1, 1), (0, 1)])
SIDES = [(0, 1), (1, 2), (2, 3), (0, 3)]


def test_lgg_validity():
    assert brute_force_lgg_valid(build_graph(SQUARE, SIDES))
    assert not brute_force_lgg_valid(build_graph(SQUARE, SIDES + [(0, 2)]))
    assert brute_force_lgg_valid(build_graph(SQUARE, []))


def test_mwis():
    assert brute_force_mwis(ConflictGraph.from_arcs(5, []))[0] == 5
    w, chosen = brute_force_mwis(ConflictGraph.from_arcs(3, [(0, 1)], [2, 5, 1]))
    assert w == 6 and chosen == frozenset({1, 2})
    assert brute_force_mwis(build_conflict_graph(build_graph(SQUARE, SIDES + [(0, 2), (1, 3)])))[0] == 4
    assert brute_force_mwis(ConflictGraph.from_arcs(0, []))[0] == 0
    with pytest.raises(TooLarge):
        brute_force_mwis(ConflictGraph.from_arcs(25, []))


def test_sat():
    one = brute_force_sat(CnfFormula(3, ((1, 2, 3),)))
    assert one.satisfiable and one.max_satisfied == 1
    pair = CnfFormula(3, ((1, 2, 3), (-1, -2, -3)))
    res = brute_force_sat(pair)
    assert res.satisfiable and pair.satisfied_by(res.best_assignment) == 2
    with pytest.raises(TooLarge):
        brute_force_sat(random_3sat(21, 2, seed=0))


def test_sat_half_the_clauses():
    for seed in range(20):
        f = random_3sat(5, 2 + seed, seed=seed)
        assert brute_force_sat(f).max_satisfied >= (f.k + 1) // 2


def test_min_dilation_small_sets():
    assert brute_force_min_dilation(point_set([(0, 0), (4, 0), (2, 3)])).contains(1)
    assert brute_force_min_dilation(point_set([(0, 0), (1, 0), (2, 0)])).contains(1)
    square = brute_force_min_dilation(SQUARE)
    assert square.overlaps(min_dilation_lgg(SQUARE).dilation)
    with mpmath.workprec(300):
        assert square.contains(mpmath.sqrt(2))
    with pytest.raises(TooLarge):
        brute_force_min_dilation(point_set([(i, i * i) for i in range(8)]))
