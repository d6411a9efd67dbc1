"""Seeded instance families shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from lgg import GeometricGraph, PointSet, build_graph
from lgg.constructors import (
    gabriel_graph,
    gen_ladder,
    gen_ladder_augmented,
    gen_ladder_augmented_lgg,
    gen_random_points,
    gen_unit_distance_grid,
)
from lgg.geometry import Point
from lgg.optimize import ConflictGraph
from lgg.reduction import all_sign_patterns, gen_max34_instance, gen_sat3_instance, random_3sat, random_max34


def random_points(rng: random.Random, n: int) -> PointSet:
    """Small integer grids produce collinear and cocircular ties; fine grids do not."""
    side = rng.choice([3, 5, 8, 20, 1000])
    denom = rng.choice([1, 2, 7])
    if n > (side + 1) ** 2:
        side = n
    seen: set[tuple[int, int]] = set()
    while len(seen) < n:
        seen.add((rng.randint(0, side), rng.randint(0, side)))
    return PointSet([Point(Fraction(a, denom), Fraction(b, denom)) for a, b in sorted(seen, key=lambda _: rng.random())])


def random_graph(seed: int, max_n: int = 40) -> GeometricGraph:
    rng = random.Random(seed)
    n = rng.randint(2, max_n)
    pts = random_points(rng, n)
    density = rng.choice([0.02, 0.05, 0.1, 0.2, 0.5, 1.0])
    pairs = [p for p in combinations(range(n), 2) if rng.random() < density]
    return build_graph(pts, pairs)


def random_graphs(count: int, max_n: int = 40, start: int = 0) -> list[GeometricGraph]:
    return [random_graph(seed, max_n) for seed in range(start, start + count)]


def random_conflict_graph(seed: int, max_nodes: int = 20) -> ConflictGraph:
    rng = random.Random(seed)
    m = rng.randint(1, max_nodes)
    density = rng.choice([0.1, 0.2, 0.35, 0.5, 0.8])
    arcs = [(a, b) for a, b in combinations(range(m), 2) if rng.random() < density]
    weights = [rng.randint(1, 10) for _ in range(m)]
    return ConflictGraph.from_arcs(m, arcs, weights)


def generator_graphs() -> list[tuple[str, GeometricGraph]]:
    """One output of every generator, with candidate edges where the generator has none."""
    out = []
    for n in (4, 16):
        pts = gen_ladder(n)
        out.append((f"ladder-{n}-gabriel", gabriel_graph(pts)))
        out.append((f"ladder-{n}-complete", build_graph(pts, list(combinations(range(len(pts)), 2)))))
    for n in (16, 36):
        out.append((f"ladder-aug-{n}-witness", gen_ladder_augmented_lgg(n)[0]))
        out.append((f"ladder-aug-{n}-gabriel", gabriel_graph(gen_ladder_augmented(n))))
    out.append(("unit-grid-5x7", gen_unit_distance_grid(5, 7)))
    out.append(("random-60-gabriel", gabriel_graph(gen_random_points(60, seed=3))))
    out.append(("sat3", gen_sat3_instance(random_3sat(3, 2, seed=1)).graph))
    out.append(("sat3-unsat", gen_sat3_instance(all_sign_patterns()).graph))
    out.append(("max34", gen_max34_instance(random_max34(3, seed=2)).graph))
    return out


def contains_k23(g: GeometricGraph) -> bool:
    """K_{2,3} as a subgraph exists iff two vertices share at least three neighbors."""
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    return any(len(nbrs[a] & nbrs[b]) >= 3 for a, b in combinations(range(g.n), 2))
