"""Gabriel graphs and the point-set generators used throughout the suite."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import BadParameter
from .geometry import Point, RationalLike, as_rational
from .graph import Edge, GeometricGraph, PointSet, integer_grid

# Beyond this magnitude gauge products could overflow int64.
_INT64_SAFE = 1 << 30


def _coord_arrays(points: Sequence[Point]):
    xs, ys = integer_grid(points)
    bound = max((abs(v) for v in xs + ys), default=0)
    dtype = np.int64 if bound < _INT64_SAFE else object
    return np.array(xs, dtype=dtype), np.array(ys, dtype=dtype)


def gabriel_graph(points: PointSet | Sequence, method: str = "cubic") -> GeometricGraph:
    """Edge (u, v) iff no third point lies in the closed disk with diameter uv.

    ``method="cubic"`` tests every pair against every point. ``"delaunay"``
    takes candidate pairs from a floating-point Delaunay triangulation (every
    Gabriel edge is Delaunay) and confirms each one exactly against the
    points a k-d tree reports near its disk; use it for large inputs.
    """
    if not isinstance(points, PointSet):
        points = PointSet(points)
    if len(points) < 1:
        raise BadParameter("need at least one point")
    if method == "delaunay" and len(points) >= 4:
        edges = _gabriel_delaunay(points)
        if edges is not None:
            return GeometricGraph(points, [Edge(a, b) for a, b in edges])
    elif method not in ("cubic", "delaunay"):
        raise BadParameter(f"unknown method {method!r}")
    return GeometricGraph(points, [Edge(a, b) for a, b in _gabriel_cubic(points)])


def _gabriel_cubic(points: PointSet) -> list[tuple[int, int]]:
    n = len(points)
    X, Y = _coord_arrays(points)
    edges = []
    for i in range(n - 1):
        js = np.arange(i + 1, n)
        dxi = X[i] - X
        dyi = Y[i] - Y
        gauge = dxi[None, :] * (X[js][:, None] - X[None, :]) + dyi[None, :] * (Y[js][:, None] - Y[None, :])
        blocked = gauge <= 0
        blocked[:, i] = False
        blocked[np.arange(len(js)), js] = False
        for j in js[~blocked.any(axis=1)]:
            edges.append((i, int(j)))
    return edges


def _gabriel_delaunay(points: PointSet) -> list[tuple[int, int]] | None:
    from scipy.spatial import Delaunay, QhullError, cKDTree

    xs, ys = integer_grid(points)
    scale = max((abs(v) for v in xs + ys), default=1) or 1
    coords = np.array([[x / scale, y / scale] for x, y in zip(xs, ys)], dtype=float)
    try:
        tri = Delaunay(coords)
    except QhullError:
        return None
    simplices = tri.simplices
    cand = set()
    for s in simplices:
        a, b, c = sorted(int(v) for v in s)
        cand.update(((a, b), (a, c), (b, c)))
    tree = cKDTree(coords)
    edges = []
    for a, b in sorted(cand):
        center = (coords[a] + coords[b]) / 2
        radius = float(np.hypot(*(coords[a] - coords[b]))) / 2
        near = tree.query_ball_point(center, radius * (1 + 1e-9) + 1e-12)
        ax, ay, bx, by = xs[a], ys[a], xs[b], ys[b]
        ok = True
        for w in near:
            if w == a or w == b:
                continue
            wx, wy = xs[w], ys[w]
            if (ax - wx) * (bx - wx) + (ay - wy) * (by - wy) <= 0:
                ok = False
                break
        if ok:
            edges.append((a, b))
    return edges


def _ladder_params(n: int) -> int:
    if not isinstance(n, int) or n < 4 or n % 2:
        raise BadParameter(f"ladder size must be an even integer >= 4, got {n}")
    root = math.isqrt(n)
    if root * root != n:
        raise BadParameter(f"ladder size must be a perfect square, got {n}")
    return root


def ladder_min_width(n: int) -> Fraction:
    return Fraction(1, 2 * n) + Fraction(3, 2)


def gen_ladder(n: int, r: RationalLike | None = None) -> PointSet:
    """Two slanted chains of points on n/2 horizontal lines.

    Line i (from 0) sits at height i/sqrt(n) and carries the points
    ``(i/n, y)`` and ``(r - i/n, y)``, in that order.
    """
    root = _ladder_params(n)
    lo = ladder_min_width(n)
    r = lo if r is None else as_rational(r)
    if r < lo:
        raise BadParameter(f"r = {r} is below the lower bound {lo}")
    pts = []
    for i in range(n // 2):
        y = Fraction(i, root)
        pts.append(Point(Fraction(i, n), y))
        pts.append(Point(r - Fraction(i, n), y))
    return PointSet(pts)


def gen_ladder_augmented(n: int, r: RationalLike | None = None) -> PointSet:
    """Ladder points plus one exterior point beside every slanted-chain gap.

    The extra point is the gap midpoint pushed outward, perpendicular to the
    gap, by half the gap length, so it lies on the gap's diametral circle.
    """
    base = list(gen_ladder(n, r))
    extra = []
    for i in range(n // 2 - 1):
        for side, outward in ((0, -1), (1, 1)):
            p, q = base[2 * i + side], base[2 * i + 2 + side]
            dx, dy = q.x - p.x, q.y - p.y
            mx, my = (p.x + q.x) / 2, (p.y + q.y) / 2
            # (dy, -dx) points to +x for both chains since dy > 0.
            extra.append(Point(mx + outward * dy / 2, my - outward * dx / 2))
    return PointSet(base + extra)


def ladder_rungs(n: int) -> list[tuple[int, int]]:
    return [(2 * i, 2 * i + 1) for i in range(n // 2)]


def gen_ladder_augmented_lgg(n: int, r: RationalLike | None = None) -> tuple[GeometricGraph, frozenset[int]]:
    """Constant-dilation LGG on the augmented ladder.

    Returns the graph and the indices of its "dotted" edges: the Gabriel
    edges form the dark layer and every rung across the two chains is added
    on top. Validity is not assumed here; callers verify it.
    """
    points = gen_ladder_augmented(n, r)
    dark = gabriel_graph(points).edge_pairs()
    pairs = sorted(set(dark) | set(ladder_rungs(n)))
    g = GeometricGraph(points, [Edge(a, b) for a, b in pairs])
    dark_set = set(dark)
    dotted = frozenset(i for i, e in enumerate(g.edges) if (e.a, e.b) not in dark_set)
    return g, dotted


def gen_unit_distance_grid(rows: int, cols: int) -> GeometricGraph:
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise BadParameter(f"grid dimensions must be positive integers, got {rows}x{cols}")
    points = PointSet(Point(Fraction(c), Fraction(r)) for r in range(rows) for c in range(cols))
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append(Edge(v, v + 1))
            if r + 1 < rows:
                edges.append(Edge(v, v + cols))
    return GeometricGraph(points, edges)


def gen_random_points(
    n: int,
    seed: int | None = 0,
    bounding_box: tuple[tuple[RationalLike, RationalLike], tuple[RationalLike, RationalLike]] = ((0, 0), (1, 1)),
    resolution: int = 10**6,
) -> PointSet:
    """``n`` distinct points on a ``resolution`` lattice inside the box."""
    if n < 1:
        raise BadParameter("n must be positive")
    (x0, y0), (x1, y1) = bounding_box
    x0, y0, x1, y1 = map(as_rational, (x0, y0, x1, y1))
    if x1 <= x0 or y1 <= y0:
        raise BadParameter("empty bounding box")
    if n > (resolution + 1) ** 2:
        raise BadParameter("more points requested than lattice sites")
    rng = random.Random(seed)
    seen = set()
    pts = []
    while len(pts) < n:
        a, b = rng.randint(0, resolution), rng.randint(0, resolution)
        if (a, b) in seen:
            continue
        seen.add((a, b))
        pts.append(Point(x0 + (x1 - x0) * Fraction(a, resolution), y0 + (y1 - y0) * Fraction(b, resolution)))
    return PointSet(pts)
