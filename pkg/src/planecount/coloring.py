"""Constructive 3-coloring by peeling, an exact k-coloring search, and 4-criticality."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graph import Graph
from .structure import as_graph

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "PLANECOUNT_BUDGET"


class TraceIncomplete(ValueError):
    """Peeling got stuck, so the greedy extension has no order to follow."""


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, budget: int):
        super().__init__(f"exact search exceeded {budget} nodes")
        self.budget = budget


class PartialAssignment(ValueError):
    pass


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_BUDGET


@dataclass(frozen=True)
class Coloring:
    assignment: tuple[int, ...]
    k: int

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment))


@dataclass(frozen=True)
class PeelTrace:
    """``stuck_at`` is the remaining subgraph (relabelled) when peeling stalls;
    ``remaining`` holds its original vertex ids."""

    removal_order: tuple[int, ...]
    stuck_at: Graph | None = None
    remaining: tuple[int, ...] = ()

    @property
    def complete(self) -> bool:
        return self.stuck_at is None


def peel_order(g) -> PeelTrace:
    """Remove the least-id vertex of degree <= 2 until none is left."""
    g = as_graph(g)
    deg = g.degrees()
    alive = [True] * g.n
    order = []
    low = {v for v in range(g.n) if deg[v] <= 2}
    while low:
        v = min(low)
        low.discard(v)
        alive[v] = False
        order.append(v)
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 2:
                    low.add(w)
    rest = tuple(v for v in range(g.n) if alive[v])
    if rest:
        return PeelTrace(tuple(order), g.induced(rest), rest)
    return PeelTrace(tuple(order))


def greedy_color_from_peel(g, trace: PeelTrace, k: int = 3) -> Coloring:
    """Color in reverse removal order with the least free color."""
    if not trace.complete:
        raise TraceIncomplete(f"{len(trace.remaining)} vertices left unpeeled")
    g = as_graph(g)
    color = [-1] * g.n
    for v in reversed(trace.removal_order):
        taken = {color[w] for w in g.adj[v]}
        c = next(c for c in range(k) if c not in taken)
        color[v] = c
    return Coloring(tuple(color), k)


def verify_coloring(g, c: Coloring | Sequence[int] | Mapping[int, int], k: int | None = None) -> bool:
    """True iff ``c`` is total on the vertices, within the palette, and proper."""
    g = as_graph(g)
    if isinstance(c, Coloring):
        k = c.k if k is None else k
        c = c.assignment
    if isinstance(c, Mapping):
        missing = [v for v in range(g.n) if v not in c]
        if missing:
            raise PartialAssignment(f"no color for vertices {missing}")
        c = [c[v] for v in range(g.n)]
    if len(c) != g.n or any(x is None for x in c):
        raise PartialAssignment("assignment does not cover every vertex")
    if k is not None and any(not 0 <= x < k for x in c):
        return False
    return all(c[u] != c[v] for u, v in g.edges)


def exact_k_color(g, k: int, budget: int | None = None) -> Coloring | None:
    """Proper k-coloring or ``None`` when none exists.

    Backtracking picks the uncolored vertex with the fewest remaining colors
    (ties: most uncolored neighbours, then least id) and prunes neighbour
    domains after every assignment.  A color beyond the largest one used so
    far is only tried once, which removes palette permutations.
    Raises ``SearchBudgetExceeded`` after ``budget`` assignments.
    """
    if k < 1:
        raise ValueError("k must be positive")
    g = as_graph(g)
    budget = default_budget() if budget is None else budget
    n = g.n
    if n == 0:
        return Coloring((), k)
    adj = [tuple(nb) for nb in g.adj]
    full = (1 << k) - 1
    domain = [full] * n
    color = [-1] * n
    nodes = 0

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] < 0:
                free = sum(1 for w in adj[v] if color[w] < 0)
                cand = (domain[v].bit_count(), -free, v)
                if key is None or cand < key:
                    best, key = v, cand
        return best

    def solve(colored: int, used: int) -> bool:
        nonlocal nodes
        if colored == n:
            return True
        v = pick()
        options = domain[v] & ((1 << min(used + 1, k)) - 1)
        while options:
            bit = options & -options
            options ^= bit
            c = bit.bit_length() - 1
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            changed = []
            ok = True
            for w in adj[v]:
                if color[w] < 0 and domain[w] & bit:
                    domain[w] ^= bit
                    changed.append(w)
                    if not domain[w]:
                        ok = False
                        break
            if ok:
                color[v] = c
                if solve(colored + 1, max(used, c + 1)):
                    return True
                color[v] = -1
            for w in changed:
                domain[w] |= bit
        return False

    if solve(0, 0):
        return Coloring(tuple(color), k)
    return None


@dataclass(frozen=True)
class CriticalityCertificate:
    """Evidence for or against 4-criticality.

    ``three_coloring`` refutes criticality when the graph itself is
    3-colorable; ``stuck_vertex`` refutes it when deleting that vertex still
    leaves a non-3-colorable graph; ``deletion_colorings`` maps each vertex to
    a 3-coloring of the graph with that vertex removed.
    """

    critical: bool
    three_coloring: Coloring | None = None
    stuck_vertex: int | None = None
    deletion_colorings: dict[int, Coloring] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.critical


def is_4_critical(g, budget: int | None = None) -> CriticalityCertificate:
    """Chromatic number 4 with every vertex-deleted subgraph 3-colorable.

    Every proper induced subgraph sits inside some ``G - v``, so checking the
    ``n`` vertex deletions covers all induced subgraphs.  A 3-coloring of
    ``G - v`` plus a fourth color on ``v`` shows ``G`` itself is 4-colorable.
    """
    g = as_graph(g)
    if g.n < 4:
        return CriticalityCertificate(False)
    witness = exact_k_color(g, 3, budget)
    if witness is not None:
        return CriticalityCertificate(False, three_coloring=witness)
    colorings = {}
    for v in range(g.n):
        c = exact_k_color(g.delete_vertex(v), 3, budget)
        if c is None:
            return CriticalityCertificate(False, stuck_vertex=v, deletion_colorings=colorings)
        colorings[v] = c
    return CriticalityCertificate(True, deletion_colorings=colorings)
