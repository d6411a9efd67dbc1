"""Command-line front end.

Every command prints one JSON document on stdout. Exit status: 0 success,
1 negative answer (invalid LGG, decision "no", oracle disagreement),
2 usage, parse, or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from . import __version__
from .constructors import (
    gabriel_graph,
    gen_ladder,
    gen_ladder_augmented,
    gen_ladder_augmented_lgg,
    gen_random_points,
    gen_unit_distance_grid,
)
from .dilation import decision_dilation, dilation, dilation_pair, min_dilation_lgg
from .errors import LGGError
from .graph import GeometricGraph
from .io import SvgStyle, dumps_result, emit_graph, emit_svg, format_rational, parse_dimacs, parse_document
from .optimize import build_conflict_graph, max_glgg_exact, max_glgg_greedy
from .oracles import MWIS_LIMIT, DILATION_LIMIT, brute_force_lgg_valid, brute_force_min_dilation, brute_force_mwis
from .reduction import gen_max34_instance, gen_sat3_instance
from .verify import all_conflicting_pairs, verify_lgg


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _stretch(s) -> dict:
    if s.is_infinite:
        return {"value": "inf", "infinite": True}
    return {
        "value": str(s),
        "lo": mpmath.nstr(s.lo, 30, strip_zeros=False),
        "hi": mpmath.nstr(s.hi, 30, strip_zeros=False),
        "infinite": False,
    }


def cmd_verify(args, out) -> int:
    doc = parse_document(_read(args.graph))
    res = verify_lgg(doc.graph)
    result = {
        "command": "verify",
        "vertices": doc.graph.n,
        "edges": doc.graph.m,
        "valid": res.valid,
        "witness": None if res.witness is None else res.witness._asdict(),
    }
    code = 0 if res.valid else 1
    if args.oracle:
        expected = brute_force_lgg_valid(doc.graph)
        result["oracle"] = {"valid": expected, "agrees": expected == res.valid}
        if expected != res.valid:
            code = 1
    out.write(dumps_result(result))
    return code


def cmd_gabriel(args, out) -> int:
    doc = parse_document(_read(args.points))
    g = gabriel_graph(doc.graph.points, method=args.method)
    out.write(emit_graph(g, {"generator": "gabriel"}))
    return 0


def cmd_maximize(args, out) -> int:
    doc = parse_document(_read(args.graph))
    cg = build_conflict_graph(doc.graph)
    if not args.weights:
        cg = cg.with_weights([1] * cg.size)
    if args.greedy:
        res = max_glgg_greedy(cg, seed=args.seed)
    else:
        res = max_glgg_exact(cg, time_budget=args.budget)
    chosen = sorted(res.chosen)
    result = {
        "command": "maximize",
        "solver": "greedy" if args.greedy else "exact",
        "total_weight": format_rational(res.total_weight),
        "size": len(chosen),
        "optimal": res.optimal,
        "nodes_explored": res.nodes_explored,
        "conflicts": len(cg.arcs),
        "chosen": chosen,
        "edges": [[doc.graph.edges[i].a, doc.graph.edges[i].b] for i in chosen],
    }
    if "target" in doc.metadata:
        result["target"] = doc.metadata["target"]
    code = 0
    if args.oracle:
        if cg.size <= MWIS_LIMIT:
            weight, _ = brute_force_mwis(cg)
            agrees = weight == res.total_weight if res.optimal else res.total_weight <= weight
            result["oracle"] = {"total_weight": format_rational(weight), "agrees": agrees}
            code = 0 if agrees else 1
        else:
            result["oracle"] = {"skipped": f"more than {MWIS_LIMIT} candidate edges"}
    out.write(dumps_result(result))
    return code


def cmd_dilation(args, out) -> int:
    g = parse_document(_read(args.graph)).graph
    if args.pair:
        u, v = args.pair
        result = {"command": "dilation", "pair": [u, v], **_stretch(dilation_pair(g, u, v))}
    else:
        rep = dilation(g)
        result = {"command": "dilation", "witness": list(rep.witness_pair), **_stretch(rep.value)}
    out.write(dumps_result(result))
    return 0


def cmd_min_dilation(args, out) -> int:
    points = parse_document(_read(args.points)).graph.points
    res = min_dilation_lgg(points, cap=args.cap, max_points=args.max_points, method=args.method)
    result = {
        "command": "min-dilation",
        "method": args.method,
        "truncated": res.truncated,
        "candidates": res.candidates,
        "edges": res.best.edge_pairs(),
        **_stretch(res.dilation),
    }
    code = 0
    if args.at_most is not None:
        k = Fraction(args.at_most)
        decided = decision_dilation(points, k, cap=args.cap, max_points=args.max_points, method=args.method)
        result["at_most"] = format_rational(k)
        result["decision"] = decided
        code = 0 if decided else 1
    if args.oracle:
        if len(points) <= DILATION_LIMIT:
            ref = brute_force_min_dilation(points)
            agrees = ref.overlaps(res.dilation)
            result["oracle"] = {**_stretch(ref), "agrees": agrees}
            if not agrees:
                code = 1
        else:
            result["oracle"] = {"skipped": f"more than {DILATION_LIMIT} points"}
    out.write(dumps_result(result))
    return code


def cmd_gen(args, out) -> int:
    kind = args.kind
    meta: dict = {"generator": kind}
    if kind == "ladder":
        pts = gen_ladder(args.n, args.r)
        g = GeometricGraph(pts, [])
        meta["n"] = args.n
    elif kind == "ladder-aug":
        meta["n"] = args.n
        if args.points_only:
            g = GeometricGraph(gen_ladder_augmented(args.n, args.r), [])
        else:
            g, dotted = gen_ladder_augmented_lgg(args.n, args.r)
            meta["dotted"] = sorted(dotted)
    elif kind in ("sat3", "max34"):
        if not args.cnf:
            raise UsageError(f"gen {kind} needs --cnf FILE")
        f = parse_dimacs(_read(args.cnf), max34=kind == "max34")
        inst = gen_sat3_instance(f) if kind == "sat3" else gen_max34_instance(f)
        g = inst.graph
        meta = inst.metadata()
    elif kind == "unit-grid":
        g = gen_unit_distance_grid(args.rows, args.cols)
        meta.update(rows=args.rows, cols=args.cols)
    else:
        box = ((0, 0), (1, 1))
        if args.box:
            x0, y0, x1, y1 = (Fraction(v) for v in args.box)
            box = ((x0, y0), (x1, y1))
        g = GeometricGraph(gen_random_points(args.n, args.seed, box), [])
        meta.update(n=args.n, seed=args.seed)
    out.write(emit_graph(g, meta))
    return 0


def cmd_plot(args, out) -> int:
    doc = parse_document(_read(args.graph))
    g = doc.graph
    highlight = frozenset()
    if args.conflicts:
        marked = set()
        for u, v, w in all_conflicting_pairs(g):
            marked.add(g.edge_index(u, v))
            marked.add(g.edge_index(u, w))
        highlight = frozenset(marked)
    style = SvgStyle(
        width=args.size,
        height=args.size,
        dotted_edges=frozenset(doc.metadata.get("dotted", [])),
        highlight=highlight,
    )
    svg = emit_svg(g, style)
    if args.output == "-":
        out.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
        out.write(dumps_result({"command": "plot", "output": args.output, "edges": g.m, "vertices": g.n}))
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lgg", description="Locally Gabriel graph toolkit")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check that a graph is a valid LGG")
    s.add_argument("graph", nargs="?", default="-")
    s.add_argument("--oracle", action="store_true", help="also run the brute-force check")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gabriel", help="Gabriel graph of a point document")
    s.add_argument("points", nargs="?", default="-")
    s.add_argument("--method", choices=("cubic", "delaunay"), default="cubic")
    s.set_defaults(func=cmd_gabriel)

    s = sub.add_parser("maximize", help="edge-maximum (or max-weight) GLGG")
    s.add_argument("graph", nargs="?", default="-")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--greedy", action="store_true")
    s.add_argument("--budget", type=float, default=None, help="seconds for the exact solver")
    s.add_argument("--weights", action="store_true", help="use edge weights from the document")
    s.add_argument("--seed", type=int, default=None, help="tie-break shuffle for --greedy")
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(func=cmd_maximize)

    s = sub.add_parser("dilation", help="dilation of a graph or of one vertex pair")
    s.add_argument("graph", nargs="?", default="-")
    s.add_argument("--pair", nargs=2, type=int, metavar=("U", "V"))
    s.set_defaults(func=cmd_dilation)

    s = sub.add_parser("min-dilation", help="minimum-dilation LGG on a small point set")
    s.add_argument("points", nargs="?", default="-")
    s.add_argument("--cap", type=int, default=100_000)
    s.add_argument("--max-points", type=int, default=12)
    s.add_argument("--method", choices=("enumerate", "bnb"), default="enumerate")
    s.add_argument("--at-most", default=None, metavar="K", help="decide whether some LGG has dilation <= K")
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(func=cmd_min_dilation)

    s = sub.add_parser("gen", help="generate point sets and instances")
    s.add_argument("kind", choices=("ladder", "ladder-aug", "sat3", "max34", "unit-grid", "random"))
    s.add_argument("--n", type=int, default=16)
    s.add_argument("--r", default=None)
    s.add_argument("--points-only", action="store_true", help="ladder-aug: omit the witness LGG edges")
    s.add_argument("--cnf", default=None)
    s.add_argument("--rows", type=int, default=2)
    s.add_argument("--cols", type=int, default=2)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--box", nargs=4, metavar=("X0", "Y0", "X1", "Y1"))
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("plot", help="render a graph document as SVG")
    s.add_argument("graph", nargs="?", default="-")
    s.add_argument("-o", "--output", default="-")
    s.add_argument("--size", type=int, default=800)
    s.add_argument("--conflicts", action="store_true", help="highlight conflicting edges")
    s.set_defaults(func=cmd_plot)
    return p


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args, out)
    except (LGGError, UsageError, ValueError, ZeroDivisionError) as exc:
        err.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2


def main() -> None:
    sys.exit(run_cli())
