"""Locally Gabriel graphs: exact predicates, verification, optimization, dilation."""

__version__ = "0.1.0"

from .constructors import (
    gabriel_graph,
    gen_ladder,
    gen_ladder_augmented,
    gen_ladder_augmented_lgg,
    gen_random_points,
    gen_unit_distance_grid,
)
from .dilation import DilationReport, Stretch, decision_dilation, dilation, dilation_pair, min_dilation_lgg
from .geometry import Point, dot_gauge, edges_conflict, in_closed_diametral_disk
from .graph import Edge, GeometricGraph, PointSet, build_graph, complete_graph, neighbors
from .optimize import (
    ConflictGraph,
    SolveResult,
    build_conflict_graph,
    enumerate_maximal_lggs,
    has_glgg_with_at_least,
    max_glgg_exact,
    max_glgg_greedy,
)
from .reduction import CnfFormula, ReductionInstance, gen_max34_instance, gen_sat3_instance
from .verify import AngularRing, Violation, all_conflicting_pairs, angular_ring, verify_lgg

__all__ = [
    "all_conflicting_pairs",
    "angular_ring",
    "AngularRing",
    "build_conflict_graph",
    "build_graph",
    "CnfFormula",
    "complete_graph",
    "ConflictGraph",
    "decision_dilation",
    "dilation",
    "dilation_pair",
    "DilationReport",
    "dot_gauge",
    "Edge",
    "edges_conflict",
    "enumerate_maximal_lggs",
    "gabriel_graph",
    "gen_ladder",
    "gen_ladder_augmented",
    "gen_ladder_augmented_lgg",
    "gen_max34_instance",
    "gen_random_points",
    "gen_sat3_instance",
    "gen_unit_distance_grid",
    "GeometricGraph",
    "has_glgg_with_at_least",
    "in_closed_diametral_disk",
    "max_glgg_exact",
    "max_glgg_greedy",
    "min_dilation_lgg",
    "neighbors",
    "Point",
    "PointSet",
    "ReductionInstance",
    "SolveResult",
    "Stretch",
    "verify_lgg",
    "Violation",
]
