"""Geometric graphs encoding 3-SAT and MAX-(3,4)-SAT instances.

Literal vertices sit on a short vertical segment. Clause vertices lie on a
far arc around the segment's midpoint and variable vertices on an even
farther arc around each conjugate pair's midpoint. Arc points are exact
rational points of the circles, ``c + R((1-t^2)/(1+t^2), 2t/(1+t^2))``,
with ``t`` on a fixed grid so that denominators stay bounded.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .errors import BadFormula
from .geometry import Point, edges_conflict
from .graph import Edge, GeometricGraph, PointSet

LITERAL_SPACING = Fraction(1, 10**5)
# t grid refinement: arc steps are rounded to 1/GRID of the nominal step
GRID = 1000


@dataclass(frozen=True)
class CnfFormula:
    """Clauses are tuples of nonzero DIMACS literals over variables ``1..num_vars``."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        self.check()

    @property
    def k(self) -> int:
        return len(self.clauses)

    def check(self, max34: bool = False) -> None:
        if self.num_vars < 1:
            raise BadFormula("at least one variable required")
        for j, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise BadFormula(f"clause {j + 1} has {len(clause)} literals, expected 3")
            vs = [abs(lit) for lit in clause]
            if 0 in vs or max(vs) > self.num_vars:
                raise BadFormula(f"clause {j + 1} mentions a variable outside 1..{self.num_vars}")
            if len(set(vs)) != 3:
                raise BadFormula(f"clause {j + 1} repeats a variable")
        if max34:
            counts = self.occurrences()
            bad = [v for v in range(1, self.num_vars + 1) if counts[v] != 4]
            if bad:
                raise BadFormula(f"variables {bad} do not occur exactly four times")

    def occurrences(self) -> Counter:
        return Counter(abs(lit) for c in self.clauses for lit in c)

    def satisfied_by(self, assignment: Sequence[bool]) -> int:
        """Number of clauses satisfied; ``assignment[i]`` is the value of variable i+1."""
        return sum(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)


@dataclass(frozen=True)
class ReductionInstance:
    graph: GeometricGraph
    formula: CnfFormula
    literal_vertices: dict[int, tuple[int, int]]
    variable_vertices: dict[tuple[int, int], int]
    clause_vertices: dict[int, int]
    e1: frozenset[int]
    e2: frozenset[int]
    target: int
    kind: str = "sat3"
    slots_per_variable: int = field(default=0)

    def literal_vertex(self, lit: int) -> int:
        pos, neg = self.literal_vertices[abs(lit)]
        return pos if lit > 0 else neg

    def metadata(self) -> dict:
        return {
            "generator": self.kind,
            "num_vars": self.formula.num_vars,
            "clauses": [list(c) for c in self.formula.clauses],
            "target": self.target,
            "e1": sorted(self.e1),
            "e2": sorted(self.e2),
            "literal_vertices": {str(i): list(v) for i, v in sorted(self.literal_vertices.items())},
            "clause_vertices": {str(j): v for j, v in sorted(self.clause_vertices.items())},
            "variable_vertices": {f"{i},{j}": v for (i, j), v in sorted(self.variable_vertices.items())},
        }


def _arc_points(center: Point, radius: Fraction, count: int, chord: Fraction) -> list[Point]:
    """``count`` exact circle points starting just above the horizontal,
    consecutive chords close to ``chord``."""
    # chord ~ 2*radius*dt/(1+t^2) for small steps
    step = chord / (2 * radius)
    unit = step / GRID
    pts = []
    t = step
    for _ in range(count):
        s = 1 + t * t
        pts.append(Point(center.x + radius * (1 - t * t) / s, center.y + radius * 2 * t / s))
        nxt = t + step * s
        t = unit * round(nxt / unit)
    return pts


def _build(formula: CnfFormula, slots: int, kind: str, target: int) -> ReductionInstance:
    n, k = formula.num_vars, formula.k
    h = LITERAL_SPACING
    points: list[Point] = []
    literal_vertices = {}
    # x_i above its conjugate x'_i, variables top to bottom
    for i in range(1, n + 1):
        literal_vertices[i] = (len(points), len(points) + 1)
        points.append(Point(Fraction(0), -(2 * i - 2) * h))
        points.append(Point(Fraction(0), -(2 * i - 1) * h))
    b0 = Point(Fraction(0), -(2 * n - 1) * h / 2)
    d1 = Fraction(n**4)
    d2 = 10 * d1
    clause_vertices = {}
    for j, p in enumerate(_arc_points(b0, d1, k, Fraction(n, 2)), start=1):
        clause_vertices[j] = len(points)
        points.append(p)
    variable_vertices = {}
    for i in range(1, n + 1):
        top, bottom = (points[v] for v in literal_vertices[i])
        bi = Point(Fraction(0), (top.y + bottom.y) / 2)
        for j, p in enumerate(_arc_points(bi, d2, slots, Fraction(n, 4)), start=1):
            variable_vertices[(i, j)] = len(points)
            points.append(p)

    pairs: list[tuple[int, int]] = []
    for j, clause in enumerate(formula.clauses, start=1):
        c = clause_vertices[j]
        for lit in clause:
            pos, neg = literal_vertices[abs(lit)]
            pairs.append((c, pos if lit > 0 else neg))
    e1_pairs = set((min(a, b), max(a, b)) for a, b in pairs)
    for i in range(1, n + 1):
        for j in range(1, slots + 1):
            z = variable_vertices[(i, j)]
            for x in literal_vertices[i]:
                pairs.append((x, z))
    canon = sorted(set((min(a, b), max(a, b)) for a, b in pairs))
    graph = GeometricGraph(PointSet(points), [Edge(a, b) for a, b in canon])
    e1 = frozenset(idx for idx, pr in enumerate(canon) if pr in e1_pairs)
    e2 = frozenset(range(len(canon))) - e1
    return ReductionInstance(
        graph, formula, literal_vertices, variable_vertices, clause_vertices,
        e1, e2, target, kind, slots,
    )


def gen_sat3_instance(f: CnfFormula) -> ReductionInstance:
    """Candidate graph whose best GLGG has (k+1)n + k edges iff ``f`` is satisfiable."""
    f.check()
    if f.k == 0:
        raise BadFormula("formula has no clauses")
    return _build(f, f.k + 1, "sat3", (f.k + 1) * f.num_vars + f.k)


def gen_max34_instance(f: CnfFormula) -> ReductionInstance:
    """Five variable vertices per variable; best GLGG size is 5n + MAX-SAT optimum."""
    from .oracles import brute_force_sat

    f.check(max34=True)
    return _build(f, 5, "max34", 5 * f.num_vars + brute_force_sat(f).max_satisfied)


# -- structural checks --------------------------------------------------------------

STRUCTURAL_PROPERTIES = (
    # the two edges into a variable vertex conflict
    "variable_vertex_exclusive",
    # the three edges into a clause vertex pairwise conflict
    "clause_vertex_exclusive",
    # a literal's edges to its variable vertices never conflict
    "variable_edges_compatible",
    # a literal's edges to its clause vertices never conflict
    "clause_edges_compatible",
    # every variable edge at a literal conflicts with every clause edge there
    "variable_edges_block_clause_edges",
)


def check_structure(inst: ReductionInstance) -> dict[str, list]:
    """Evaluate each structural conflict property; returns the failures per property."""
    g = inst.graph
    pts = g.points
    n = inst.formula.num_vars
    fails: dict[str, list] = {name: [] for name in STRUCTURAL_PROPERTIES}

    def conflict(shared, a, b):
        return edges_conflict(pts[shared], pts[a], pts[b])

    for (i, j), z in inst.variable_vertices.items():
        x, xc = inst.literal_vertices[i]
        if not conflict(z, x, xc):
            fails["variable_vertex_exclusive"].append((i, j))
    for j, c in inst.clause_vertices.items():
        lits = [inst.literal_vertex(l) for l in inst.formula.clauses[j - 1]]
        for a, b in combinations(lits, 2):
            if not conflict(c, a, b):
                fails["clause_vertex_exclusive"].append((j, a, b))
    clause_nbrs: dict[int, list[int]] = {}
    for j, c in inst.clause_vertices.items():
        for l in inst.formula.clauses[j - 1]:
            clause_nbrs.setdefault(inst.literal_vertex(l), []).append(c)
    for i in range(1, n + 1):
        zs = [inst.variable_vertices[(i, j)] for j in range(1, inst.slots_per_variable + 1)]
        for x in inst.literal_vertices[i]:
            for a, b in combinations(zs, 2):
                if conflict(x, a, b):
                    fails["variable_edges_compatible"].append((x, a, b))
            cs = clause_nbrs.get(x, [])
            for a, b in combinations(cs, 2):
                if conflict(x, a, b):
                    fails["clause_edges_compatible"].append((x, a, b))
            for z, c in product(zs, cs):
                if not conflict(x, z, c):
                    fails["variable_edges_block_clause_edges"].append((x, z, c))
    return fails


def fill_variable_vertices(inst: ReductionInstance, chosen: frozenset[int]) -> frozenset[int]:
    """Rewrite a GLGG on a MAX-(3,4)-SAT instance so every variable vertex is used.

    Each variable's five variable-vertex edges all go to one literal, whose
    clause edges are dropped; the conjugate keeps its clause edges. A literal
    already holding variable edges keeps them; otherwise the literal with
    fewer clause edges is chosen. Since a literal meets at most four clauses
    the result is never smaller than the input.
    """
    g = inst.graph
    out = set(chosen)
    slots = inst.slots_per_variable
    for i, (x, xc) in inst.literal_vertices.items():
        zs = [inst.variable_vertices[(i, j)] for j in range(1, slots + 1)]
        e2_x = {g.edge_index(x, z) for z in zs}
        e2_xc = {g.edge_index(xc, z) for z in zs}
        e1_x = {e for e in inst.e1 if e in out and x in g.edges[e][:2]}
        e1_xc = {e for e in inst.e1 if e in out and xc in g.edges[e][:2]}
        # fill the variable vertices from the literal whose clause edges we give up
        if out & e2_x and not out & e2_xc:
            fill, drop_e1 = e2_x, e1_x
        elif out & e2_xc and not out & e2_x:
            fill, drop_e1 = e2_xc, e1_xc
        elif len(e1_x) <= len(e1_xc):
            fill, drop_e1 = e2_x, e1_x
        else:
            fill, drop_e1 = e2_xc, e1_xc
        out -= e2_x | e2_xc
        out -= drop_e1
        out |= fill
    return frozenset(out)


# -- formula generators -------------------------------------------------------------

def random_3sat(num_vars: int, num_clauses: int, seed: int | None = None) -> CnfFormula:
    if num_vars < 3:
        raise BadFormula("3-SAT clauses need at least three variables")
    rng = random.Random(seed)
    clauses = []
    for _ in range(num_clauses):
        vs = rng.sample(range(1, num_vars + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return CnfFormula(num_vars, tuple(clauses))


def all_sign_patterns(vars3: tuple[int, int, int] = (1, 2, 3)) -> CnfFormula:
    """The 8 clauses over three variables: unsatisfiable."""
    clauses = tuple(
        tuple(v if s else -v for v, s in zip(vars3, signs)) for signs in product((True, False), repeat=3)
    )
    return CnfFormula(max(vars3), clauses)


def random_max34(num_vars: int, seed: int | None = None) -> CnfFormula:
    """Random formula where every variable occurs in exactly four 3-literal clauses."""
    if num_vars % 3 or num_vars < 3:
        raise BadFormula("need num_vars divisible by 3 so that 4n/3 clauses exist")
    rng = random.Random(seed)
    k = 4 * num_vars // 3
    for _ in range(10_000):
        slots = [v for v in range(1, num_vars + 1) for _ in range(4)]
        rng.shuffle(slots)
        clauses = [slots[3 * j: 3 * j + 3] for j in range(k)]
        if all(len(set(c)) == 3 for c in clauses):
            signed = tuple(tuple(v if rng.random() < 0.5 else -v for v in c) for c in clauses)
            f = CnfFormula(num_vars, signed)
            f.check(max34=True)
            return f
    raise BadFormula("could not place occurrences; try another seed")
