"""Rotation systems, face tracing and the count bundle of a plane graph.

Darts are integers: edge ``i`` (the i-th edge of the underlying graph in
sorted order, ``u < v``) owns dart ``2*i`` running ``u -> v`` and dart
``2*i + 1`` running ``v -> u``, so ``reverse(d) == d ^ 1``.

Faces are orbits of ``next(d)``: the successor of ``reverse(d)`` in the
cyclic order at ``head(d)``.  Using the predecessor instead traces the
mirror embedding, which has the same face lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .graph import Graph


class InvalidRotation(ValueError):
    """Rotation system has a loop, a repeated neighbour or a dangling dart."""


class NotConnected(ValueError):
    pass


class NotGenusZero(ValueError):
    def __init__(self, genus: int):
        super().__init__(f"embedding has genus {genus}, expected 0")
        self.genus = genus


class Dart(NamedTuple):
    edge_id: int
    tail: int
    head: int


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbour order at each vertex.

    ``order[v]`` lists the neighbours of ``v`` in cyclic order; the starting
    point of each list is irrelevant.
    """

    order: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        order = tuple(tuple(int(w) for w in nb) for nb in self.order)
        object.__setattr__(self, "order", order)
        n = len(order)
        for v, nb in enumerate(order):
            if len(set(nb)) != len(nb):
                raise InvalidRotation(f"vertex {v} repeats a neighbour")
            for w in nb:
                if w == v:
                    raise InvalidRotation(f"loop at vertex {v}")
                if not 0 <= w < n:
                    raise InvalidRotation(f"vertex {v} lists unknown neighbour {w}")
                if v not in order[w]:
                    raise InvalidRotation(f"dart {v}->{w} has no reverse")

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]]) -> RotationSystem:
        return cls(tuple(tuple(nb) for nb in lists))

    @property
    def n(self) -> int:
        return len(self.order)

    @cached_property
    def graph(self) -> Graph:
        return Graph.from_adjacency(self.order)

    @cached_property
    def _edge_index(self) -> dict[tuple[int, int], int]:
        return {uv: i for i, uv in enumerate(self.graph.edges)}

    @cached_property
    def _position(self) -> tuple[dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(nb)} for nb in self.order)

    @property
    def num_darts(self) -> int:
        return 2 * self.graph.m

    def dart(self, tail: int, head: int) -> int:
        if tail < head:
            return 2 * self._edge_index[(tail, head)]
        return 2 * self._edge_index[(head, tail)] + 1

    def dart_info(self, d: int) -> Dart:
        u, v = self.graph.edges[d >> 1]
        return Dart(d >> 1, u, v) if d % 2 == 0 else Dart(d >> 1, v, u)

    def tail(self, d: int) -> int:
        return self.dart_info(d).tail

    def head(self, d: int) -> int:
        return self.dart_info(d).head

    @staticmethod
    def reverse(d: int) -> int:
        return d ^ 1

    def darts_at(self, v: int) -> list[int]:
        """Darts with tail ``v``, in cyclic order."""
        return [self.dart(v, w) for w in self.order[v]]

    @cached_property
    def next_dart(self) -> tuple[int, ...]:
        nxt = [0] * self.num_darts
        for d in range(self.num_darts):
            _, u, v = self.dart_info(d)
            nb = self.order[v]
            w = nb[(self._position[v][u] + 1) % len(nb)]
            nxt[d] = self.dart(v, w)
        return tuple(nxt)

    def mirror(self) -> RotationSystem:
        return RotationSystem(tuple(tuple(reversed(nb)) for nb in self.order))


@dataclass(frozen=True)
class FaceSet:
    """Face cycles as dart sequences.

    Isolated vertices contribute one face with no darts (length 0) so that
    Euler's relation holds for the single-vertex graph.
    """

    faces: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.faces)

    def __len__(self) -> int:
        return len(self.faces)


def trace_faces(rotation: RotationSystem) -> FaceSet:
    nxt = rotation.next_dart
    seen = [False] * len(nxt)
    faces = []
    for start in range(len(nxt)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = nxt[d]
        faces.append(tuple(cyc))
    faces.extend(() for nb in rotation.order if not nb)
    return FaceSet(tuple(faces))


def is_connected(rotation: RotationSystem) -> bool:
    return rotation.graph.is_connected()


def euler_genus(rotation: RotationSystem) -> int:
    """Genus ``g`` of the traced surface, ``n - e + f = 2c - 2g`` over ``c`` components."""
    g = rotation.graph
    c = len(g.components()) if g.n else 0
    chi = g.n - g.m + len(trace_faces(rotation))
    return (2 * c - chi) // 2


@dataclass(frozen=True)
class GraphCounts:
    n: int
    e: int
    f: int
    n3: int
    f3: int
    e3: int


@dataclass(frozen=True)
class PlaneGraph:
    rotation: RotationSystem
    faces: FaceSet

    @property
    def graph(self) -> Graph:
        return self.rotation.graph

    @property
    def n(self) -> int:
        return self.rotation.n

    def face_vertices(self, i: int) -> list[int]:
        return [self.rotation.tail(d) for d in self.faces.faces[i]]

    def triangular_faces(self) -> list[int]:
        """Indices of faces bounded by a 3-cycle."""
        return [
            i for i, cyc in enumerate(self.faces.faces)
            if len(cyc) == 3 and len(set(self.face_vertices(i))) == 3
        ]


def build_plane_graph(rotation: RotationSystem) -> PlaneGraph:
    if not is_connected(rotation):
        raise NotConnected("plane graphs must be connected")
    faces = trace_faces(rotation)
    g = rotation.graph
    genus = (2 - (g.n - g.m + len(faces))) // 2
    if genus != 0:
        raise NotGenusZero(genus)
    return PlaneGraph(rotation, faces)


def min_degree(g) -> int:
    """Minimum degree of a ``Graph``, ``RotationSystem`` or ``PlaneGraph``."""
    if isinstance(g, (PlaneGraph, RotationSystem)):
        g = g.graph
    return min(g.degrees(), default=0)


def counts(pg: PlaneGraph) -> GraphCounts:
    g = pg.graph
    tri = pg.triangular_faces()
    tri_edges = {d >> 1 for i in tri for d in pg.faces.faces[i]}
    return GraphCounts(
        n=g.n,
        e=g.m,
        f=len(pg.faces),
        n3=sum(1 for d in g.degrees() if d == 3),
        f3=len(tri),
        e3=len(tri_edges),
    )
