from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lgg import build_graph, gen_ladder_augmented_lgg, gen_sat3_instance
from lgg.errors import ParseError, ShapeError, ValidationError
from lgg.graph import point_set
from lgg.io import emit_dimacs, emit_graph, emit_svg, format_rational, parse_dimacs, parse_document, parse_graph, SvgStyle
from lgg.reduction import random_3sat, random_max34

from corpus import random_graph


def test_small_document():
    g = parse_graph('{"points": [[0, 0], [1, 0]], "edges": [[0, 1]]}')
    assert g.n == 2 and g.m == 1


def test_coordinates_are_exact():
    g = parse_graph('{"points": [["1/3", 0.1], ["1e-30", "0.00001"]], "edges": []}')
    assert g.points[0].x == Fraction(1, 3)
    assert g.points[0].y == Fraction(1, 10)
    assert g.points[1] == (Fraction(1, 10**30), Fraction(1, 10**5))


@pytest.mark.parametrize(
    "text, field",
    [
        ('{"points": [[0, 0], [1, 0]], "edges": [[0, 0]]}', "edges"),
        ('{"points": [[0, 0], [0, 0]]}', "points"),
        ('{"points": [[0, 0, 1]]}', "points[0]"),
        ('{"points": [[0, "abc"]]}', "points[0][1]"),
        ('{"points": [[0, true]]}', "points[0][1]"),
        ('{"points": [[0, 0], [1, 1]], "edges": [[0, 5]]}', "edges"),
        ('{"version": "other", "points": []}', "version"),
        ("[]", "$"),
    ],
)
def test_validation_errors(text, field):
    with pytest.raises(ValidationError) as info:
        parse_document(text)
    assert info.value.field.startswith(field)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_document('{"points": [[0, 0],\n  [1, }')
    assert info.value.line == 2


@pytest.mark.parametrize(
    "q, text",
    [(Fraction(3), "3"), (Fraction(-1, 100000), "-0.00001"), (Fraction(49, 32), "1.53125"), (Fraction(1, 3), "1/3"), (Fraction(-7, 6), "-7/6")],
)
def test_format_rational(q, text):
    assert format_rational(q) == text
    assert Fraction(text) == q


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_round_trip_random_graphs(seed):
    g = random_graph(seed, max_n=15)
    text = emit_graph(g, {"seed": seed})
    back = parse_document(text)
    assert back.graph.points == g.points and back.graph.edge_pairs() == g.edge_pairs()
    assert emit_graph(back.graph, back.metadata) == text


def test_weights_round_trip():
    g = build_graph(point_set([(0, 0), (1, 0), (0, 1)]), [(0, 1, "2/3"), (1, 2)])
    back = parse_graph(emit_graph(g))
    assert [e.weight for e in back.edges] == [Fraction(2, 3), 1]


def test_reduction_document_mixes_scales():
    inst = gen_sat3_instance(random_3sat(6, 8, seed=3))
    text = emit_graph(inst.graph, inst.metadata())
    assert "-0.00001" in text
    assert emit_graph(parse_graph(text), inst.metadata()) == text


def test_dimacs():
    f = parse_dimacs("c comment\np cnf 3 1\n1 2 3 0\n")
    assert f.num_vars == 3 and f.k == 1
    assert parse_dimacs(emit_dimacs(f)) == f
    g = random_max34(6, seed=1)
    assert parse_dimacs(emit_dimacs(g), max34=True) == g


@pytest.mark.parametrize(
    "text, error",
    [
        ("p cnf 3 1\n1 1 2 0\n", ShapeError),
        ("p cnf 3 1\n1 2 0\n", ShapeError),
        ("p cnf 3 1\n1 2 4 0\n", ShapeError),
        ("p cnf 3 2\n1 2 3 0\n", ParseError),
        ("1 2 3 0\n", ParseError),
        ("p cnf 3 1\n1 2 x 0\n", ParseError),
        ("p cnf 3 1\n1 2 3\n", ParseError),
        ("p dnf 3 1\n1 2 3 0\n", ParseError),
    ],
)
def test_dimacs_errors(text, error):
    with pytest.raises(error):
        parse_dimacs(text)


def test_dimacs_max34_shape():
    with pytest.raises(ShapeError):
        parse_dimacs("p cnf 3 3\n1 2 3 0\n-1 2 3 0\n1 -2 -3 0\n", max34=True)


def test_svg():
    empty = emit_svg(build_graph(point_set([]), []))
    assert empty.startswith("<?xml") and "<line" not in empty and empty.rstrip().endswith("</svg>")
    square = emit_svg(build_graph(point_set([(0, 0), (1, 0), (1, 1), (0, 1)]), [(0, 1), (1, 2), (2, 3), (0, 3)]))
    assert square.count("<circle") == 4 and square.count("<line") == 4


def test_svg_dotted_edges():
    g, dotted = gen_ladder_augmented_lgg(16)
    svg = emit_svg(g, SvgStyle(dotted_edges=dotted))
    lines = [l for l in svg.splitlines() if l.startswith("<line")]
    assert sum("stroke-dasharray" in l for l in lines) == len(dotted)
    assert any("stroke-dasharray" not in l for l in lines)
