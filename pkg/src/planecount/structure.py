"""Embedding-independent hypothesis checks: shared triangles and cycle lengths."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph


def as_graph(g) -> Graph:
    """Accept a ``Graph``, ``RotationSystem`` or ``PlaneGraph``."""
    return g if isinstance(g, Graph) else g.graph


@dataclass(frozen=True)
class StructureReport:
    min_degree: int
    connected: bool
    has_adjacent_triangles: bool
    triangle_count: int
    forbidden_cycles_found: tuple[tuple[int, tuple[int, ...]], ...] = field(default=())

    @property
    def forbidden_lengths(self) -> list[int]:
        return [k for k, _ in self.forbidden_cycles_found]


def adjacent_triangle_witness(g) -> tuple[int, int] | None:
    """An edge lying in two 3-cycles, or ``None``."""
    g = as_graph(g)
    for u, v in g.edges:
        if len(g.adj[u] & g.adj[v]) >= 2:
            return (u, v)
    return None


def adjacent_triangles_exist(g) -> bool:
    return adjacent_triangle_witness(g) is not None


def count_triangles(g) -> int:
    g = as_graph(g)
    # each triangle is counted once per edge
    return sum(len(g.adj[u] & g.adj[v]) for u, v in g.edges) // 3


def _cycle_search(g: Graph, wanted: set[int], first_only: bool) -> dict[int, tuple[int, ...]]:
    """One witness cycle per length in ``wanted``.

    Cycles are rooted at their least vertex; paths only visit larger ids.
    """
    found: dict[int, tuple[int, ...]] = {}
    if not wanted:
        return found
    hi = max(wanted)
    adj = g.adj

    for root in range(g.n):
        if g.n - root < min(wanted - found.keys(), default=hi + 1):
            break
        path = [root]
        on_path = {root}

        def extend(u: int) -> bool:
            length = len(path)
            for w in adj[u]:
                if w == root:
                    if length >= 3 and length in wanted and length not in found:
                        found[length] = tuple(path)
                        if first_only or len(found) == len(wanted):
                            return True
                elif w > root and w not in on_path and length < hi:
                    path.append(w)
                    on_path.add(w)
                    done = extend(w)
                    path.pop()
                    on_path.discard(w)
                    if done:
                        return True
            return False

        if extend(root):
            break
    return found


def find_cycle_of_length(g, k: int) -> tuple[int, ...] | None:
    g = as_graph(g)
    if k < 3 or k > g.n:
        return None
    return _cycle_search(g, {k}, first_only=True).get(k)


def has_cycle_of_length(g, k: int) -> bool:
    return find_cycle_of_length(g, k) is not None


def cycle_lengths_present(g, lo: int, hi: int) -> dict[int, tuple[int, ...]]:
    """Map each length in ``[lo, hi]`` occurring as a cycle to one witness."""
    g = as_graph(g)
    wanted = {k for k in range(max(lo, 3), min(hi, g.n) + 1)}
    return dict(sorted(_cycle_search(g, wanted, first_only=False).items()))


def is_cycle(g, cyc) -> bool:
    g = as_graph(g)
    k = len(cyc)
    return (
        k >= 3
        and len(set(cyc)) == k
        and all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))
    )


def forbidden_cycle_scan(g, lo: int, hi: int) -> StructureReport:
    if not 3 <= lo <= hi:
        raise ValueError("need 3 <= lo <= hi")
    g = as_graph(g)
    return StructureReport(
        min_degree=min(g.degrees(), default=0),
        connected=g.is_connected(),
        has_adjacent_triangles=adjacent_triangles_exist(g),
        triangle_count=count_triangles(g),
        forbidden_cycles_found=tuple(cycle_lengths_present(g, lo, hi).items()),
    )
