"""Exact planar predicates over rational coordinates.

Every decision here is the sign of an exact :class:`fractions.Fraction`
expression. Containment in a diametral disk uses the closed convention:
a point on the boundary circle counts as inside.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Union

from .errors import DegenerateEdge, EndpointQuery

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Convert ints, Fractions, and decimal or ``p/q`` strings exactly.

    Floats are rejected because they would smuggle rounding in.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: RationalLike, y: RationalLike) -> "Point":
        return cls(as_rational(x), as_rational(y))


def dot_gauge(u: Point, v: Point, w: Point) -> Fraction:
    """Return ``(u - w) . (v - w)``.

    Non-positive exactly when the angle uwv is at least a right angle,
    i.e. when ``w`` sits in the closed disk with diameter ``uv``.
    """
    return (u.x - w.x) * (v.x - w.x) + (u.y - w.y) * (v.y - w.y)


def in_closed_diametral_disk(u: Point, v: Point, w: Point) -> bool:
    if u == v:
        raise DegenerateEdge(f"edge endpoints coincide at {u}")
    if w == u or w == v:
        raise EndpointQuery(f"query point {w} is an endpoint of the edge")
    return dot_gauge(u, v, w) <= 0


def edges_conflict(u: Point, v: Point, w: Point) -> bool:
    """True when edges (u, v) and (u, w) cannot both appear in an LGG."""
    if u == v or u == w or v == w:
        raise DegenerateEdge(f"points must be pairwise distinct: {u}, {v}, {w}")
    return dot_gauge(u, v, w) <= 0 or dot_gauge(u, w, v) <= 0


def squared_distance(p: Point, q: Point) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy
