"""Edge-maximum and maximum-weight GLGGs as independent sets of a conflict graph.

A GLGG over a candidate graph is exactly a set of candidate edges with no two
conflicting, so every solver here works on :class:`ConflictGraph`, whose
nodes are candidate edges. Node sets are Python ints used as bitsets.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .graph import GeometricGraph
from .verify import all_conflicting_pairs


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class ConflictGraph:
    """Nodes ``0..size-1`` (edge indices of the source graph) and conflict arcs."""

    size: int
    arcs: tuple[tuple[int, int], ...]
    weights: tuple[Fraction, ...]
    adj: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_arcs(cls, size: int, arcs: Iterable[tuple[int, int]], weights: Sequence | None = None) -> "ConflictGraph":
        adj = [0] * size
        canon = set()
        for a, b in arcs:
            if a == b or not (0 <= a < size and 0 <= b < size):
                raise ValueError(f"bad arc ({a}, {b})")
            a, b = min(a, b), max(a, b)
            canon.add((a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        w = tuple(Fraction(1) for _ in range(size)) if weights is None else tuple(Fraction(x) for x in weights)
        if len(w) != size:
            raise ValueError("one weight per node required")
        if any(x < 0 for x in w):
            raise ValueError("weights must be nonnegative")
        return cls(size, tuple(sorted(canon)), w, tuple(adj))

    @property
    def nodes(self) -> range:
        return range(self.size)

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def is_independent(self, chosen: Iterable[int]) -> bool:
        mask = 0
        for v in chosen:
            mask |= 1 << v
        return all(not (self.adj[v] & mask) for v in _bits(mask))

    def weight_of(self, chosen: Iterable[int]) -> Fraction:
        return sum((self.weights[v] for v in chosen), Fraction(0))

    def with_weights(self, weights: Sequence) -> "ConflictGraph":
        return ConflictGraph.from_arcs(self.size, self.arcs, weights)


@dataclass(frozen=True)
class SolveResult:
    chosen: frozenset[int]
    total_weight: Fraction
    optimal: bool
    nodes_explored: int = 0


def build_conflict_graph(g: GeometricGraph) -> ConflictGraph:
    arcs = set()
    for u, v, w in all_conflicting_pairs(g):
        a, b = g.edge_index(u, v), g.edge_index(u, w)
        arcs.add((min(a, b), max(a, b)))
    return ConflictGraph.from_arcs(g.m, arcs, [e.weight for e in g.edges])


def _integer_weights(weights: Sequence[Fraction]) -> tuple[list[int], int]:
    scale = 1
    for w in weights:
        scale = math.lcm(scale, w.denominator)
    return [int(w * scale) for w in weights], scale


class _BranchAndBound:
    def __init__(self, cg: ConflictGraph, deadline: float | None):
        self.adj = cg.adj
        self.w, self.scale = _integer_weights(cg.weights)
        self.deadline = deadline
        self.best_w = -1
        self.best_set = 0
        self.explored = 0
        self.timed_out = False
        self.order = sorted(range(cg.size), key=lambda v: (-self.w[v], -_popcount(cg.adj[v]), v))

    def offer(self, mask: int, weight: int) -> None:
        if weight > self.best_w:
            self.best_w, self.best_set = weight, mask

    def cover_bound(self, cand: int) -> int:
        # Greedy clique cover in (weight desc, degree desc) order; each clique
        # contributes its first (heaviest) member's weight.
        adj, w = self.adj, self.w
        cliques: list[list[int]] = []  # [common-neighbourhood mask, max weight]
        total = 0
        for v in self.order:
            if not cand >> v & 1:
                continue
            bit = 1 << v
            for c in cliques:
                if c[0] & bit:
                    c[0] &= adj[v]
                    break
            else:
                cliques.append([adj[v] & cand, w[v]])
                total += w[v]
        return total

    def reduce(self, cand: int, chosen: int, weight: int) -> tuple[int, int, int]:
        adj, w = self.adj, self.w
        changed = True
        while changed and cand:
            changed = False
            for v in _bits(cand):
                if not cand >> v & 1:
                    continue
                nb = adj[v] & cand
                if nb == 0:
                    cand &= ~(1 << v)
                    chosen |= 1 << v
                    weight += w[v]
                    changed = True
                elif nb & (nb - 1) == 0 and w[v] >= w[nb.bit_length() - 1]:
                    cand &= ~(nb | (1 << v))
                    chosen |= 1 << v
                    weight += w[v]
                    changed = True
        return cand, chosen, weight

    def search(self, cand: int, chosen: int, weight: int) -> None:
        self.explored += 1
        if self.deadline is not None and self.explored % 256 == 0 and time.monotonic() > self.deadline:
            self.timed_out = True
        if self.timed_out:
            return
        cand, chosen, weight = self.reduce(cand, chosen, weight)
        if not cand:
            self.offer(chosen, weight)
            return
        if weight + self.cover_bound(cand) <= self.best_w:
            return
        adj = self.adj
        pivot, deg = -1, -1
        for v in _bits(cand):
            d = _popcount(adj[v] & cand)
            if d > deg:
                pivot, deg = v, d
        bit = 1 << pivot
        self.search(cand & ~adj[pivot] & ~bit, chosen | bit, weight + self.w[pivot])
        self.search(cand & ~bit, chosen, weight)


def max_glgg_exact(cg: ConflictGraph, time_budget: float | None = None) -> SolveResult:
    """Maximum-weight independent set by branch and bound.

    Branches on a maximum-degree node (include first), prunes with a greedy
    weighted clique cover, and applies the degree-0 and degree-1 reductions.
    If ``time_budget`` seconds elapse the best incumbent is returned with
    ``optimal=False``.
    """
    deadline = None if time_budget is None else time.monotonic() + time_budget
    bb = _BranchAndBound(cg, deadline)
    seed = max_glgg_greedy(cg)
    mask = 0
    for v in seed.chosen:
        mask |= 1 << v
    bb.offer(mask, sum(bb.w[v] for v in seed.chosen))
    bb.search((1 << cg.size) - 1, 0, 0)
    chosen = frozenset(_bits(bb.best_set))
    return SolveResult(chosen, cg.weight_of(chosen), not bb.timed_out, bb.explored)


def has_glgg_with_at_least(cg: ConflictGraph, m, time_budget: float | None = None) -> bool | None:
    """Decision form: is there an independent set of weight at least ``m``?

    ``None`` when the budget ran out before the question was settled.
    """
    res = max_glgg_exact(cg, time_budget)
    if res.total_weight >= m:
        return True
    return False if res.optimal else None


def max_glgg_greedy(cg: ConflictGraph, seed: int | None = None) -> SolveResult:
    """Greedy pick (heaviest, then fewest live conflicts) plus swap local search."""
    rng = random.Random(seed) if seed is not None else None
    tiebreak = list(range(cg.size))
    if rng is not None:
        rng.shuffle(tiebreak)
    adj, w = cg.adj, cg.weights
    alive = (1 << cg.size) - 1
    chosen = 0
    while alive:
        v = min(_bits(alive), key=lambda u: (-w[u], _popcount(adj[u] & alive), tiebreak[u]))
        chosen |= 1 << v
        alive &= ~(adj[v] | (1 << v))
    chosen = _local_search(cg, chosen, tiebreak)
    picked = frozenset(_bits(chosen))
    return SolveResult(picked, cg.weight_of(picked), False, 0)


def _local_search(cg: ConflictGraph, chosen: int, tiebreak: list[int]) -> int:
    adj, w = cg.adj, cg.weights
    order = sorted(range(cg.size), key=lambda u: tiebreak[u])
    improved = True
    while improved:
        improved = False
        # free nodes (no chosen neighbour) are added outright
        for u in order:
            if not chosen >> u & 1 and not adj[u] & chosen:
                chosen |= 1 << u
                improved = True
        for v in order:
            if not chosen >> v & 1:
                continue
            vbit = 1 << v
            # nodes whose only chosen neighbour is v
            tight = [u for u in order if not chosen >> u & 1 and adj[u] & chosen == vbit]
            best_gain, best_swap = Fraction(0), None
            for i, a in enumerate(tight):
                if w[a] > w[v] + best_gain:
                    best_gain, best_swap = w[a] - w[v], (a,)
                for b in tight[i + 1:]:
                    if not adj[a] >> b & 1 and w[a] + w[b] - w[v] > best_gain:
                        best_gain, best_swap = w[a] + w[b] - w[v], (a, b)
            if best_swap is not None:
                chosen &= ~vbit
                for u in best_swap:
                    chosen |= 1 << u
                improved = True
    return chosen


@dataclass(frozen=True)
class Enumeration:
    sets: tuple[frozenset[int], ...]
    truncated: bool

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)


def iter_maximal_independent_sets(cg: ConflictGraph) -> Iterator[frozenset[int]]:
    """Bron-Kerbosch with pivoting over the compatibility (non-conflict) relation."""
    full = (1 << cg.size) - 1
    compat = [full & ~cg.adj[v] & ~(1 << v) for v in range(cg.size)]

    def expand(r: int, p: int, x: int):
        if not p:
            if not x:
                yield frozenset(_bits(r))
            return
        pivot, best = -1, -1
        for u in _bits(p | x):
            c = _popcount(p & compat[u])
            if c > best:
                pivot, best = u, c
        for v in _bits(p & ~compat[pivot]):
            bit = 1 << v
            yield from expand(r | bit, p & compat[v], x & compat[v])
            p &= ~bit
            x |= bit

    yield from expand(0, full, 0)


def enumerate_maximal_lggs(cg: ConflictGraph, cap: int = 100_000) -> Enumeration:
    out = []
    for s in iter_maximal_independent_sets(cg):
        if len(out) >= cap:
            return Enumeration(tuple(out), True)
        out.append(s)
    return Enumeration(tuple(out), False)
