"""Exhaustive reference implementations.

Each oracle follows the definitions as literally as possible and shares no
code path with the fast routine it checks. Hard size caps keep them from
running away.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import mpmath
import numpy as np

from .dilation import DEFAULT_BITS, Stretch, _margin
from .errors import TooLarge
from .geometry import in_closed_diametral_disk, squared_distance
from .graph import GeometricGraph, PointSet
from .optimize import ConflictGraph
from .reduction import CnfFormula

MWIS_LIMIT = 24
SAT_LIMIT = 20
DILATION_LIMIT = 7


def brute_force_lgg_valid(g: GeometricGraph) -> bool:
    """No neighbor of u or v lies in the closed diametral disk of any edge uv."""
    nbrs = [set() for _ in range(g.n)]
    for e in g.edges:
        nbrs[e.a].add(e.b)
        nbrs[e.b].add(e.a)
    pts = g.points
    for e in g.edges:
        for w in (nbrs[e.a] | nbrs[e.b]) - {e.a, e.b}:
            if in_closed_diametral_disk(pts[e.a], pts[e.b], pts[w]):
                return False
    return True


def brute_force_mwis(cg: ConflictGraph) -> tuple[Fraction, frozenset[int]]:
    """Scan all 2^m node subsets; returns the best weight and the first set attaining it."""
    m = cg.size
    if m > MWIS_LIMIT:
        raise TooLarge(f"{m} nodes exceeds the exhaustive limit of {MWIS_LIMIT}")
    if m == 0:
        return Fraction(0), frozenset()
    scale = math.lcm(*(w.denominator for w in cg.weights))
    iw = [int(w * scale) for w in cg.weights]
    exact = sum(iw) < 2**62
    best_w, best_mask = -1, 0
    chunk = 1 << min(m, 20)
    for start in range(0, 1 << m, chunk):
        masks = np.arange(start, start + chunk, dtype=np.int64)
        ok = np.ones(chunk, dtype=bool)
        for a, b in cg.arcs:
            ok &= ((masks >> a) & (masks >> b) & 1) == 0
        if exact:
            total = np.zeros(chunk, dtype=np.int64)
            for v in range(m):
                total += ((masks >> v) & 1) * iw[v]
            total[~ok] = -1
            k = int(np.argmax(total))
            if int(total[k]) > best_w:
                best_w, best_mask = int(total[k]), int(masks[k])
        else:
            for mask in masks[ok]:
                val = sum(iw[v] for v in range(m) if int(mask) >> v & 1)
                if val > best_w:
                    best_w, best_mask = val, int(mask)
    chosen = frozenset(v for v in range(m) if best_mask >> v & 1)
    return Fraction(best_w, scale), chosen


@dataclass(frozen=True)
class SatSummary:
    satisfiable: bool
    max_satisfied: int
    best_assignment: tuple[bool, ...]


def brute_force_sat(f: CnfFormula) -> SatSummary:
    if f.num_vars > SAT_LIMIT:
        raise TooLarge(f"{f.num_vars} variables exceeds the exhaustive limit of {SAT_LIMIT}")
    best, best_assign = -1, ()
    for assign in product((False, True), repeat=f.num_vars):
        count = sum(1 for c in f.clauses if any(assign[abs(l) - 1] == (l > 0) for l in c))
        if count > best:
            best, best_assign = count, assign
            if best == f.k:
                break
    return SatSummary(best == f.k, best, best_assign)


def _lgg_subsets(points: PointSet):
    """Yield every edge subset of the complete graph that is a valid LGG."""
    n = len(points)
    pairs = list(combinations(range(n), 2))
    bad = set()
    # incident edge pairs (u,v),(u,w) that violate the empty-disk rule
    for u in range(n):
        for v, w in combinations([x for x in range(n) if x != u], 2):
            pu, pv, pw = points[u], points[v], points[w]
            if in_closed_diametral_disk(pu, pv, pw) or in_closed_diametral_disk(pu, pw, pv):
                e1 = (min(u, v), max(u, v))
                e2 = (min(u, w), max(u, w))
                bad.add((e1, e2))
                bad.add((e2, e1))
    chosen: list[tuple[int, int]] = []

    def walk(i: int):
        if i == len(pairs):
            yield list(chosen)
            return
        yield from walk(i + 1)
        e = pairs[i]
        if all((e, c) not in bad for c in chosen):
            chosen.append(e)
            yield from walk(i + 1)
            chosen.pop()

    yield from walk(0)


def _floyd_warshall(n: int, edges, length) -> list[list[float]]:
    inf = math.inf
    d = [[0.0 if i == j else inf for j in range(n)] for i in range(n)]
    for a, b in edges:
        d[a][b] = d[b][a] = length[a][b]
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return d


def brute_force_min_dilation(points: PointSet) -> Stretch:
    """Minimum dilation over all LGG edge subsets of the complete graph."""
    if not isinstance(points, PointSet):
        points = PointSet(points)
    n = len(points)
    if n > DILATION_LIMIT:
        raise TooLarge(f"{n} points exceeds the exhaustive limit of {DILATION_LIMIT}")
    if n < 2:
        raise TooLarge("need at least two points")
    length = [[math.sqrt(float(squared_distance(p, q))) for q in points] for p in points]
    scored = []
    for edges in _lgg_subsets(points):
        d = _floyd_warshall(n, edges, length)
        value = max(d[i][j] / length[i][j] for i in range(n) for j in range(i + 1, n))
        scored.append((value, edges))
    floor = min(s for s, _ in scored)
    if math.isinf(floor):
        return Stretch.infinite()
    best = None
    with mpmath.workprec(DEFAULT_BITS):
        exact_len = [[mpmath.sqrt(mpmath.mpf(squared_distance(p, q).numerator) / squared_distance(p, q).denominator)
                      for q in points] for p in points]
        for value, edges in scored:
            if value > floor * (1 + 1e-9):
                continue
            d = [[mpmath.inf] * n for _ in range(n)]
            for i in range(n):
                d[i][i] = mpmath.mpf(0)
            for a, b in edges:
                d[a][b] = d[b][a] = exact_len[a][b]
            for k in range(n):
                for i in range(n):
                    for j in range(n):
                        if d[i][k] + d[k][j] < d[i][j]:
                            d[i][j] = d[i][k] + d[k][j]
            ratio = max(d[i][j] / exact_len[i][j] for i in range(n) for j in range(i + 1, n))
            if best is None or ratio < best:
                best = ratio
        eps = _margin(n, DEFAULT_BITS)
        return Stretch(best * (1 - eps), best * (1 + eps))
