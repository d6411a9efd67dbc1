"""Embedded undirected graphs over exact point sets."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DuplicateEdge, DuplicatePoint, IndexOutOfRange, SelfLoop, ValidationError
from .geometry import Point, RationalLike, as_rational

ONE = Fraction(1)


class PointSet(Sequence[Point]):
    """An indexed sequence of pairwise distinct points."""

    __slots__ = ("_points",)

    def __init__(self, points: Iterable[Point | tuple]):
        pts = tuple(p if isinstance(p, Point) else Point.of(*p) for p in points)
        seen: dict[Point, int] = {}
        for i, p in enumerate(pts):
            j = seen.setdefault(p, i)
            if j != i:
                raise DuplicatePoint(f"points {j} and {i} coincide at ({p.x}, {p.y})")
        self._points = pts

    def __getitem__(self, i):
        return self._points[i]

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __eq__(self, other) -> bool:
        if isinstance(other, PointSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"PointSet({len(self)} points)"


class Edge(NamedTuple):
    a: int
    b: int
    weight: Fraction = ONE


class GeometricGraph:
    """Point set plus an undirected edge list with per-vertex incidence lists.

    Edges are stored with ``a < b`` and keep their index for the lifetime
    of the graph. ``grid`` holds the coordinates multiplied by the common
    denominator, so that sign predicates can run on plain integers.
    """

    __slots__ = ("points", "edges", "adjacency", "_edge_index", "_grid")

    def __init__(self, points: PointSet, edges: Sequence[Edge]):
        self.points = points
        self.edges = tuple(edges)
        incident: list[list[int]] = [[] for _ in range(len(points))]
        index: dict[tuple[int, int], int] = {}
        for i, e in enumerate(self.edges):
            incident[e.a].append(i)
            incident[e.b].append(i)
            index[(e.a, e.b)] = i
        self.adjacency = tuple(tuple(lst) for lst in incident)
        self._edge_index = index
        self._grid = None

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        _check_index(v, self.n)
        out = []
        for i in self.adjacency[v]:
            e = self.edges[i]
            out.append(e.b if e.a == v else e.a)
        return out

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [(e.a, e.b) for e in self.edges]

    def edge_index(self, a: int, b: int) -> int | None:
        if a > b:
            a, b = b, a
        return self._edge_index.get((a, b))

    def has_edge(self, a: int, b: int) -> bool:
        return self.edge_index(a, b) is not None

    @property
    def grid(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Integer coordinates ``(xs, ys)`` after scaling by the common denominator."""
        if self._grid is None:
            self._grid = integer_grid(self.points)
        return self._grid

    def subgraph(self, edge_indices: Iterable[int]) -> "GeometricGraph":
        keep = sorted(set(edge_indices))
        return GeometricGraph(self.points, [self.edges[i] for i in keep])

    def __repr__(self) -> str:
        return f"GeometricGraph(n={self.n}, m={self.m})"


def integer_grid(points: Sequence[Point]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # Positive uniform scaling preserves the sign of every gauge and cross product.
    scale = 1
    for p in points:
        scale = math.lcm(scale, p.x.denominator, p.y.denominator)
    xs = tuple(p.x.numerator * (scale // p.x.denominator) for p in points)
    ys = tuple(p.y.numerator * (scale // p.y.denominator) for p in points)
    return xs, ys


def _check_index(v: int, n: int, where: str = "vertex") -> None:
    if not isinstance(v, int) or not 0 <= v < n:
        raise IndexOutOfRange(f"{where} index {v} outside 0..{n - 1}")


def build_graph(
    points: PointSet | Iterable,
    edge_pairs: Iterable[Sequence],
) -> GeometricGraph:
    """Validate and canonicalize an edge list.

    Each item of ``edge_pairs`` is ``(a, b)`` or ``(a, b, weight)``.
    Duplicates are reported rather than merged.
    """
    if not isinstance(points, PointSet):
        points = PointSet(points)
    n = len(points)
    edges: list[Edge] = []
    seen: dict[tuple[int, int], int] = {}
    for pos, item in enumerate(edge_pairs):
        if len(item) not in (2, 3):
            raise ValidationError("expected (a, b) or (a, b, weight)", f"edges[{pos}]")
        a, b = item[0], item[1]
        _check_index(a, n, f"edges[{pos}] endpoint")
        _check_index(b, n, f"edges[{pos}] endpoint")
        if a == b:
            raise SelfLoop(f"edges[{pos}]: self-loop at vertex {a}")
        weight = ONE if len(item) == 2 or item[2] is None else as_rational(item[2])
        if weight < 0:
            raise ValidationError(f"negative weight {weight}", f"edges[{pos}]")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise DuplicateEdge(f"edges[{pos}]: {key} repeats edges[{seen[key]}]")
        seen[key] = pos
        edges.append(Edge(key[0], key[1], weight))
    return GeometricGraph(points, edges)


def neighbors(g: GeometricGraph, v: int) -> list[int]:
    return g.neighbors(v)


def complete_graph(points: PointSet | Iterable) -> GeometricGraph:
    if not isinstance(points, PointSet):
        points = PointSet(points)
    return GeometricGraph(points, [Edge(a, b) for a, b in combinations(range(len(points)), 2)])


def point_set(coords: Iterable[tuple[RationalLike, RationalLike]]) -> PointSet:
    return PointSet(Point.of(x, y) for x, y in coords)
