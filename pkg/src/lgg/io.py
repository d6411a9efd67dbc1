"""Graph documents (JSON), DIMACS CNF input, and SVG output.

Coordinates travel as strings: ``"3"``, ``"-0.00001"`` or ``"49/32"``.
Parsing never goes through floats; JSON number literals are read from
their source text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import BadFormula, DuplicatePoint, LGGError, ParseError, ShapeError, ValidationError
from .graph import GeometricGraph, PointSet, build_graph
from .geometry import Point
from .reduction import CnfFormula

VERSION = "lgg-graph/1"


def format_rational(q: Fraction) -> str:
    """Shortest exact text: integer, terminating decimal, or ``p/q``."""
    if q.denominator == 1:
        return str(q.numerator)
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{q.numerator}/{q.denominator}"
    places = max(twos, fives)
    scaled = abs(q.numerator) * 10**places // q.denominator
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if q < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def parse_rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int, Fraction)):
        raise ValidationError(f"expected a number or numeric string, got {value!r}", where)
    try:
        return Fraction(value.strip()) if isinstance(value, str) else Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not an exact number: {value!r}", where) from exc


@dataclass
class GraphDocument:
    graph: GeometricGraph
    metadata: dict = field(default_factory=dict)


def _loads(text: str):
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc


def parse_document(text: str) -> GraphDocument:
    doc = _loads(text)
    if not isinstance(doc, dict):
        raise ValidationError("top level must be an object", "$")
    version = doc.get("version", VERSION)
    if version != VERSION:
        raise ValidationError(f"unsupported version {version!r}", "version")
    raw_points = doc.get("points")
    if not isinstance(raw_points, list):
        raise ValidationError("missing list of points", "points")
    pts = []
    for i, p in enumerate(raw_points):
        if not isinstance(p, list) or len(p) != 2:
            raise ValidationError("expected [x, y]", f"points[{i}]")
        pts.append(Point(parse_rational(p[0], f"points[{i}][0]"), parse_rational(p[1], f"points[{i}][1]")))
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ValidationError("expected a list", "edges")
    pairs = []
    for i, e in enumerate(raw_edges):
        if not isinstance(e, list) or len(e) not in (2, 3) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in e[:2]
        ):
            raise ValidationError("expected [a, b] or [a, b, weight]", f"edges[{i}]")
        if len(e) == 3:
            pairs.append((e[0], e[1], parse_rational(e[2], f"edges[{i}][2]")))
        else:
            pairs.append((e[0], e[1]))
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ValidationError("expected an object", "metadata")
    try:
        points = PointSet(pts)
    except DuplicatePoint as exc:
        raise ValidationError(str(exc), "points") from exc
    try:
        graph = build_graph(points, pairs)
    except ValidationError:
        raise
    except LGGError as exc:
        raise ValidationError(str(exc), "edges") from exc
    return GraphDocument(graph, metadata)


def parse_graph(text: str) -> GeometricGraph:
    return parse_document(text).graph


def emit_graph(g: GeometricGraph, metadata: dict | None = None) -> str:
    """Canonical document text; parsing it back and re-emitting is byte-identical."""
    edges = []
    for e in g.edges:
        edges.append([e.a, e.b] if e.weight == 1 else [e.a, e.b, format_rational(e.weight)])
    doc = {
        "version": VERSION,
        "points": [[format_rational(p.x), format_rational(p.y)] for p in g.points],
        "edges": edges,
        "metadata": metadata or {},
    }
    return _dump(doc)


def _dump(doc: dict) -> str:
    # one point / edge per line keeps large documents diffable
    lines = ["{", f'  "version": {json.dumps(doc["version"])},']
    for key in ("points", "edges"):
        items = doc[key]
        if not items:
            lines.append(f'  "{key}": [],')
            continue
        lines.append(f'  "{key}": [')
        body = [f"    {json.dumps(item, separators=(', ', ': '))}" for item in items]
        lines.append(",\n".join(body))
        lines.append("  ],")
    lines.append(f'  "metadata": {json.dumps(doc["metadata"], sort_keys=True)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str, max34: bool = False) -> CnfFormula:
    """Read a DIMACS CNF formula whose clauses have three distinct variables."""
    num_vars = num_clauses = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    current_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("malformed problem line", lineno)
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise ParseError("non-integer counts in problem line", lineno) from exc
            continue
        if num_vars is None:
            raise ParseError("clause before problem line", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError as exc:
                raise ParseError(f"bad literal {tok!r}", lineno) from exc
            if current_line is None:
                current_line = lineno
            if lit == 0:
                _check_clause(current, num_vars, current_line)
                clauses.append(tuple(current))
                current, current_line = [], None
            else:
                current.append(lit)
    if current:
        raise ParseError("last clause is not terminated by 0", current_line)
    if num_vars is None:
        raise ParseError("missing problem line")
    if num_clauses != len(clauses):
        raise ParseError(f"problem line announces {num_clauses} clauses, found {len(clauses)}")
    f = CnfFormula(num_vars, tuple(clauses))
    if max34:
        try:
            f.check(max34=True)
        except BadFormula as exc:
            raise ShapeError(str(exc)) from exc
    return f


def _check_clause(lits: list[int], num_vars: int, line: int) -> None:
    if len(lits) != 3:
        raise ShapeError(f"clause has {len(lits)} literals, expected 3", line)
    vs = [abs(l) for l in lits]
    if max(vs) > num_vars:
        raise ShapeError(f"variable {max(vs)} exceeds declared count {num_vars}", line)
    if len(set(vs)) != 3:
        raise ShapeError("clause repeats a variable", line)


def emit_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {f.k}"]
    lines += [" ".join(str(l) for l in c) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


# -- SVG ------------------------------------------------------------------------------

@dataclass
class SvgStyle:
    width: int = 800
    height: int = 800
    margin: int = 20
    point_radius: float = 3.0
    dotted_edges: frozenset[int] = frozenset()
    highlight: frozenset[int] = frozenset()
    stroke: str = "#222"
    dotted_stroke: str = "#1f77b4"
    highlight_stroke: str = "#d62728"


def emit_svg(g: GeometricGraph, style: SvgStyle | None = None) -> str:
    """Standalone SVG. Floats appear only here, after all exact work is done."""
    style = style or SvgStyle()
    w, h, pad = style.width, style.height, style.margin
    xs = [float(p.x) for p in g.points]
    ys = [float(p.y) for p in g.points]
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
    ]
    if xs:
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        span = max(x1 - x0, y1 - y0) or 1.0
        k = (min(w, h) - 2 * pad) / span

        def sx(x):
            return pad + (x - x0) * k

        def sy(y):
            # SVG y grows downward
            return h - pad - (y - y0) * k

        out.append('<g id="edges" fill="none">')
        for i, e in enumerate(g.edges):
            attrs = f'stroke="{style.stroke}" stroke-width="1.5"'
            if i in style.highlight:
                attrs = f'stroke="{style.highlight_stroke}" stroke-width="2.5"'
            elif i in style.dotted_edges:
                attrs = f'stroke="{style.dotted_stroke}" stroke-width="1.5" stroke-dasharray="4 3"'
            out.append(
                f'<line x1="{sx(xs[e.a]):.3f}" y1="{sy(ys[e.a]):.3f}" '
                f'x2="{sx(xs[e.b]):.3f}" y2="{sy(ys[e.b]):.3f}" {attrs}/>'
            )
        out.append("</g>")
        out.append('<g id="points" fill="black">')
        for x, y in zip(xs, ys):
            out.append(f'<circle cx="{sx(x):.3f}" cy="{sy(y):.3f}" r="{style.point_radius}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def dumps_result(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, default=_jsonable) + "\n"


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")

