"""Dilation (stretch factor) with certified high-precision intervals.

Path lengths are sums of square roots, so values are reported as
:class:`Stretch` intervals computed in ``mpmath`` at a working precision of
``DEFAULT_BITS`` bits, with a rigorous relative error margin.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np
from scipy.sparse.csgraph import shortest_path

from .errors import EnumerationTruncated, SamePair, TooFewVertices, TooManyPoints
from .geometry import squared_distance
from .graph import Edge, GeometricGraph, PointSet, _check_index, complete_graph

DEFAULT_BITS = 160
MAX_WIDTH = 1e-9


@dataclass(frozen=True)
class Stretch:
    """Closed interval ``[lo, hi]`` known to contain a dilation value."""

    lo: mpmath.mpf
    hi: mpmath.mpf

    @classmethod
    def infinite(cls) -> "Stretch":
        return cls(mpmath.inf, mpmath.inf)

    @property
    def is_infinite(self) -> bool:
        return self.lo == mpmath.inf

    @property
    def mid(self) -> mpmath.mpf:
        return self.lo if self.is_infinite else (self.lo + self.hi) / 2

    @property
    def width(self):
        return 0 if self.is_infinite else self.hi - self.lo

    def __float__(self) -> float:
        return float(self.mid)

    def contains(self, value) -> bool:
        if self.is_infinite:
            return value == math.inf or value == mpmath.inf
        return self.lo <= value <= self.hi

    def certainly_below(self, other: "Stretch") -> bool:
        return self.hi < other.lo

    def overlaps(self, other: "Stretch") -> bool:
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        return not (self.hi < other.lo or other.hi < self.lo)

    def __le__(self, other) -> bool:
        """Possibly at most ``other`` (interval-wise ``lo <= other``)."""
        if isinstance(other, Stretch):
            return self.lo <= other.hi
        return self.lo <= other

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        return mpmath.nstr(self.mid, 15)


def _margin(n_vertices: int, bits: int):
    # relative error: one rounding per sqrt/division, one per path addition
    return mpmath.mpf(2 * n_vertices + 8) * mpmath.ldexp(1, -bits)


def _length(sq: Fraction) -> mpmath.mpf:
    return mpmath.sqrt(mpmath.mpf(sq.numerator) / sq.denominator)


def _interval(value: mpmath.mpf, eps) -> Stretch:
    return Stretch(value * (1 - eps), value * (1 + eps))


def _adjacency_lengths(g: GeometricGraph):
    adj: list[list[tuple[int, mpmath.mpf]]] = [[] for _ in range(g.n)]
    for e in g.edges:
        length = _length(squared_distance(g.points[e.a], g.points[e.b]))
        adj[e.a].append((e.b, length))
        adj[e.b].append((e.a, length))
    return adj


def _dijkstra(adj, source: int) -> list:
    dist = [None] * len(adj)
    dist[source] = mpmath.mpf(0)
    heap = [(dist[source], source)]
    done = [False] * len(adj)
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, length in adj[u]:
            nd = d + length
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


@dataclass(frozen=True)
class DilationReport:
    value: Stretch
    witness_pair: tuple[int, int]
    per_pair: dict[tuple[int, int], Stretch] | None = None

    @property
    def global_(self) -> Stretch:
        return self.value


def dilation(g: GeometricGraph, per_pair: bool = False, bits: int = DEFAULT_BITS) -> DilationReport:
    """Global dilation by one Dijkstra per source.

    A disconnected graph has infinite dilation; its witness pair then spans
    two components.
    """
    if g.n < 2:
        raise TooFewVertices("dilation needs at least two vertices")
    with mpmath.workprec(bits):
        adj = _adjacency_lengths(g)
        eps = _margin(g.n, bits)
        best = None
        best_pair = (0, 1)
        table = {} if per_pair else None
        for u in range(g.n - 1):
            dist = _dijkstra(adj, u)
            for v in range(u + 1, g.n):
                if dist[v] is None:
                    if best is not mpmath.inf:
                        best, best_pair = mpmath.inf, (u, v)
                    if table is not None:
                        table[(u, v)] = Stretch.infinite()
                    continue
                ratio = dist[v] / _length(squared_distance(g.points[u], g.points[v]))
                if table is not None:
                    table[(u, v)] = _interval(ratio, eps)
                if best is None or (best is not mpmath.inf and ratio > best):
                    best, best_pair = ratio, (u, v)
        value = Stretch.infinite() if best is mpmath.inf else _interval(best, eps)
    return DilationReport(value, best_pair, table)


def dilation_pair(g: GeometricGraph, u: int, v: int, bits: int = DEFAULT_BITS) -> Stretch:
    _check_index(u, g.n)
    _check_index(v, g.n)
    if u == v:
        raise SamePair("dilation of a vertex with itself is undefined")
    with mpmath.workprec(bits):
        dist = _dijkstra(_adjacency_lengths(g), u)
        if dist[v] is None:
            return Stretch.infinite()
        ratio = dist[v] / _length(squared_distance(g.points[u], g.points[v]))
        return _interval(ratio, _margin(g.n, bits))


# -- fast floating-point screening -------------------------------------------------

def euclidean_matrix(points: Sequence) -> np.ndarray:
    xy = np.array([[float(p.x), float(p.y)] for p in points])
    diff = xy[:, None, :] - xy[None, :, :]
    return np.sqrt((diff ** 2).sum(axis=2))


def float_dilation(n: int, edges: Sequence[tuple[int, int]], euclid: np.ndarray) -> float:
    """Double-precision dilation, used only to screen candidates."""
    if n < 2:
        return 1.0
    mat = np.zeros((n, n))
    for a, b in edges:
        mat[a, b] = mat[b, a] = euclid[a, b]
    dist = shortest_path(mat, method="D", directed=False)
    iu = np.triu_indices(n, 1)
    return float(np.max(dist[iu] / euclid[iu]))


@dataclass(frozen=True)
class MinDilationResult:
    best: GeometricGraph
    dilation: Stretch
    truncated: bool = False
    candidates: int = 0


def min_dilation_lgg(
    points: PointSet | Sequence,
    cap: int = 100_000,
    max_points: int = 12,
    method: str = "enumerate",
    strict: bool = False,
) -> MinDilationResult:
    """Minimum-dilation LGG over a small point set.

    ``method="enumerate"`` scores every maximal LGG (at most ``cap`` of them);
    ties go to the lexicographically smallest edge list. ``"bnb"`` runs an
    exact branch and bound instead, for inputs with too many maximal LGGs to
    list; its tie-break is the first optimum found.
    """
    from .optimize import build_conflict_graph, iter_maximal_independent_sets

    if not isinstance(points, PointSet):
        points = PointSet(points)
    if len(points) > max_points:
        raise TooManyPoints(f"{len(points)} points exceeds the limit of {max_points}")
    if len(points) < 2:
        raise TooFewVertices("need at least two points")
    universe = complete_graph(points)
    if method == "bnb":
        return _min_dilation_bnb(universe)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    cg = build_conflict_graph(universe)
    euclid = euclidean_matrix(points)
    scored = []
    truncated = False
    for count, chosen in enumerate(iter_maximal_independent_sets(cg)):
        if count >= cap:
            truncated = True
            break
        pairs = [(universe.edges[i].a, universe.edges[i].b) for i in sorted(chosen)]
        scored.append((float_dilation(len(points), pairs, euclid), sorted(pairs)))
    if truncated and strict:
        raise EnumerationTruncated(f"more than {cap} maximal LGGs")
    best_graph, best_value = _refine(points, scored)
    return MinDilationResult(best_graph, best_value, truncated, len(scored))


def _refine(points: PointSet, scored: list) -> tuple[GeometricGraph, Stretch]:
    """Recheck every float near-minimum with certified intervals."""
    floor = min(s for s, _ in scored)
    if math.isinf(floor):
        pairs = min(p for s, p in scored)
        g = GeometricGraph(points, [Edge(a, b) for a, b in pairs])
        return g, Stretch.infinite()
    close = [p for s, p in scored if s <= floor * (1 + 1e-9)]
    best = None
    for pairs in close:
        g = GeometricGraph(points, [Edge(a, b) for a, b in pairs])
        value = dilation(g).value
        if best is None or value.certainly_below(best[1]) or (
            value.overlaps(best[1]) and pairs < best[2]
        ):
            best = (g, value, pairs)
    return best[0], best[1]


def _min_dilation_bnb(universe: GeometricGraph) -> MinDilationResult:
    from .optimize import build_conflict_graph, _bits

    cg = build_conflict_graph(universe)
    n, m = universe.n, universe.m
    euclid = euclidean_matrix(universe.points)
    pairs = [(e.a, e.b) for e in universe.edges]
    adj = cg.adj
    state = {"best": math.inf, "sets": [], "nodes": 0}

    def upper_value(mask: int) -> tuple[float, np.ndarray]:
        mat = np.zeros((n, n))
        for i in _bits(mask):
            a, b = pairs[i]
            mat[a, b] = mat[b, a] = euclid[a, b]
        dist, pred = shortest_path(mat, method="D", directed=False, return_predecessors=True)
        return dist, pred

    iu = np.triu_indices(n, 1)

    def search(allowed: int, included: int) -> None:
        state["nodes"] += 1
        # every completion is a subgraph of `allowed`, so its dilation is a lower bound
        dist, pred = upper_value(allowed)
        ratios = dist[iu] / euclid[iu]
        k = int(np.argmax(ratios))
        bound = float(ratios[k])
        if bound >= state["best"] * (1 - 1e-12):
            return
        undecided = allowed & ~included
        # edges without live conflicts belong to every completion
        forced = 0
        for i in _bits(undecided):
            if not adj[i] & allowed:
                forced |= 1 << i
        included |= forced
        undecided &= ~forced
        if not undecided:
            state["best"] = bound
            state["sets"] = [allowed]
            return
        # branch on a conflicted edge of the witness pair's shortest path when possible
        a, b = int(iu[0][k]), int(iu[1][k])
        pivot = None
        if not math.isinf(bound):
            v = b
            while v != a:
                p = int(pred[a, v])
                i = universe.edge_index(p, v)
                if undecided >> i & 1:
                    pivot = i
                    break
                v = p
        if pivot is None:
            pivot = max(_bits(undecided), key=lambda i: (bin(adj[i] & allowed).count("1"), -i))
        bit = 1 << pivot
        search(allowed & ~adj[pivot], included | bit)
        search(allowed & ~bit, included)

    # incumbent: the Gabriel graph is an LGG; grow it to a maximal one
    gabriel = {(a, b) for a, b in _gabriel_pairs(universe.points)}
    seed_mask = 0
    for i, pr in enumerate(pairs):
        if pr in gabriel:
            seed_mask |= 1 << i
    seed = _extend_to_maximal(cg, seed_mask)
    seed_mask = sum(1 << i for i in seed)
    state["best"] = float_dilation(n, [pairs[i] for i in seed], euclid)
    state["sets"] = [seed_mask]
    search((1 << m) - 1, 0)
    if not state["sets"]:
        raise RuntimeError("branch and bound found no candidate")
    scored = []
    for mask in state["sets"]:
        chosen = _extend_to_maximal(cg, mask)
        sel = sorted(pairs[i] for i in chosen)
        scored.append((float_dilation(n, sel, euclid), sel))
    best_graph, best_value = _refine(universe.points, scored)
    return MinDilationResult(best_graph, best_value, False, state["nodes"])


def _gabriel_pairs(points):
    from .constructors import gabriel_graph

    return gabriel_graph(points).edge_pairs()


def _extend_to_maximal(cg, mask: int) -> list[int]:
    from .optimize import _bits

    for i in range(cg.size):
        if not mask >> i & 1 and not cg.adj[i] & mask:
            mask |= 1 << i
    return list(_bits(mask))


def decision_dilation(points: PointSet | Sequence, k, **kwargs) -> bool:
    """Is there an LGG on ``points`` with dilation at most ``k``?"""
    if k == math.inf or k == mpmath.inf:
        return True
    res = min_dilation_lgg(points, **kwargs)
    if res.dilation.is_infinite:
        return False
    with mpmath.workprec(DEFAULT_BITS):
        kv = mpmath.mpf(Fraction(k).numerator) / Fraction(k).denominator if not isinstance(k, mpmath.mpf) else k
        if res.dilation.hi <= kv:
            return True
        if res.dilation.lo > kv:
            return False
    # undecidable at this precision: the optimum equals k to within the interval width
    return True
