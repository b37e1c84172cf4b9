"""Minimal immutable simple graph on vertices ``0..n-1``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with dense vertex ids.

    ``edges`` is normalised to sorted ``(u, v)`` pairs with ``u < v``.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(n, tuple(edges))

    @classmethod
    def from_adjacency(cls, adj) -> Graph:
        return cls(len(adj), tuple((u, v) for u, nb in enumerate(adj) for v in nb if u < v))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in nb) for nb in self.adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled densely in increasing order of old id."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            tuple((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def delete_vertex(self, v: int) -> Graph:
        return self.induced(w for w in range(self.n) if w != v)

    def relabel(self, perm) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g) -> Graph:
        index = {v: i for i, v in enumerate(sorted(g.nodes))}
        return cls(len(index), tuple((index[u], index[v]) for u, v in g.edges))


# Small named graphs used throughout tests, docs and scripts.

def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def wheel(rim: int) -> Graph:
    """Cycle on ``0..rim-1`` plus hub ``rim`` adjacent to every rim vertex."""
    return Graph(rim + 1, cycle(rim).edges + tuple((i, rim) for i in range(rim)))


def cube() -> Graph:
    return Graph(8, tuple((u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)))


def prism() -> Graph:
    """Triangles 0-1-2 and 3-4-5 joined by the matching i -- i+3."""
    return Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)))


def grotzsch() -> Graph:
    """Mycielskian of C5: 11 vertices, 20 edges, triangle-free, chromatic number 4."""
    edges = list(cycle(5).edges)
    for i in range(5):
        for j in ((i - 1) % 5, (i + 1) % 5):
            edges.append((5 + i, j))
        edges.append((5 + i, 10))
    return Graph(11, tuple(edges))
