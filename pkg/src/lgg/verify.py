"""LGG verification by checking only angularly consecutive incident edges.

Around each vertex the neighbors are sorted counterclockwise. Whenever two
incident edges conflict, some pair that is adjacent in this circular order
conflicts as well, so scanning the consecutive pairs suffices and the whole
check costs one angular sort per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .graph import GeometricGraph, _check_index


class Violation(NamedTuple):
    """Edges (shared, first) and (shared, second) conflict."""

    shared: int
    first: int
    second: int


@dataclass(frozen=True)
class AngularRing:
    center: int
    ring: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.ring)

    def consecutive_pairs(self) -> list[tuple[int, int]]:
        """Cyclic neighbor pairs; a 2-ring yields its single pair once."""
        r = self.ring
        if len(r) < 2:
            return []
        if len(r) == 2:
            return [(r[0], r[1])]
        return [(r[i], r[(i + 1) % len(r)]) for i in range(len(r))]


@dataclass(frozen=True)
class VerifyResult:
    valid: bool
    witness: Violation | None = None

    def __bool__(self) -> bool:
        return self.valid


def _angle_key(dx: int, dy: int):
    # Quadrant, then a ratio that grows with the angle inside that quadrant,
    # then squared length so that nearer points on a common ray come first.
    if dx > 0 and dy >= 0:
        return (0, Fraction(dy, dx), dx * dx + dy * dy)
    if dx <= 0 and dy > 0:
        return (1, Fraction(-dx, dy), dx * dx + dy * dy)
    if dx < 0 and dy <= 0:
        return (2, Fraction(dy, dx), dx * dx + dy * dy)
    return (3, Fraction(dx, -dy), dx * dx + dy * dy)


def _ring(g: GeometricGraph, u: int) -> tuple[int, ...]:
    xs, ys = g.grid
    ux, uy = xs[u], ys[u]
    nbrs = g.neighbors(u)
    nbrs.sort(key=lambda v: _angle_key(xs[v] - ux, ys[v] - uy))
    return tuple(nbrs)


def angular_ring(g: GeometricGraph, u: int) -> AngularRing:
    _check_index(u, g.n)
    return AngularRing(u, _ring(g, u))


def _conflict(xs, ys, u: int, v: int, w: int) -> bool:
    ux, uy, vx, vy, wx, wy = xs[u], ys[u], xs[v], ys[v], xs[w], ys[w]
    return (ux - wx) * (vx - wx) + (uy - wy) * (vy - wy) <= 0 or (
        (ux - vx) * (wx - vx) + (uy - vy) * (wy - vy) <= 0
    )


def verify_lgg(g: GeometricGraph) -> VerifyResult:
    """Decide LGG validity; the witness is the first conflict in scan order."""
    xs, ys = g.grid
    for u in range(g.n):
        if len(g.adjacency[u]) < 2:
            continue
        ring = AngularRing(u, _ring(g, u))
        for v, w in ring.consecutive_pairs():
            if _conflict(xs, ys, u, v, w):
                return VerifyResult(False, Violation(u, v, w))
    return VerifyResult(True)


def all_conflicting_pairs(g: GeometricGraph) -> list[Violation]:
    """Every conflicting pair of incident edges, once each, in ring order."""
    xs, ys = g.grid
    out: list[Violation] = []
    for u in range(g.n):
        if len(g.adjacency[u]) < 2:
            continue
        ring = _ring(g, u)
        for i, v in enumerate(ring):
            for w in ring[i + 1:]:
                if _conflict(xs, ys, u, v, w):
                    out.append(Violation(u, v, w))
    return out


def consecutive_conflicts(g: GeometricGraph, u: int) -> list[Violation]:
    """Conflicting consecutive ring pairs at ``u``."""
    xs, ys = g.grid
    ring = angular_ring(g, u)
    return [Violation(u, v, w) for v, w in ring.consecutive_pairs() if _conflict(xs, ys, u, v, w)]
