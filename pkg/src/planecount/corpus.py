"""Graph corpora: graph6 and planar_code I/O, isomorph-free generation, embeddings."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Iterator

import networkx as nx

from .graph import Graph
from .plane import RotationSystem

GRAPH6_HEADER = ">>graph6<<"
PLANAR_CODE_HEADERS = (b">>planar_code<<", b">>planar_code le<<", b">>planar_code be<<")
GENERATION_CAP = 10


class MalformedGraph6(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class MalformedPlanarCode(ValueError):
    def __init__(self, message: str, record: int):
        super().__init__(f"record {record}: {message}")
        self.record = record


class CapExceeded(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


# --------------------------------------------------------------------------
# graph6
# --------------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def write_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g``; bits follow the upper triangle column by column."""
    adj = g.adj
    bits = [1 if i in adj[j] else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else "") + _encode_n(g.n) + body


def parse_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    line = line.rstrip("\r\n")
    base = 0
    if line.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
    s = line[base:]
    if not s:
        raise MalformedGraph6("empty graph6 record", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"invalid character {ch!r}", base + i)
    vals = [ord(ch) - 63 for ch in s]

    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise MalformedGraph6("truncated 8-byte vertex count", base + len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise MalformedGraph6("truncated 4-byte vertex count", base + len(vals))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - pos
    if have != need:
        raise MalformedGraph6(f"expected {need} data bytes, got {have}", base + pos + min(have, need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need and vals[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise MalformedGraph6("non-zero padding bits", base + len(vals) - 1)
    return Graph(n, tuple(edges))


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line.strip())


# --------------------------------------------------------------------------
# planar_code
# --------------------------------------------------------------------------

def _strip_planar_header(data: bytes) -> bytes:
    for h in PLANAR_CODE_HEADERS:
        if data.startswith(h):
            return data[len(h):]
    return data


def parse_planar_code(data: bytes | BinaryIO) -> Iterator[RotationSystem]:
    """Yield one rotation system per record.

    Records are a vertex count byte followed, for each vertex, by its
    1-based neighbours in rotation order and a terminating 0.  The two-byte
    wide variant (leading 0 byte) is rejected.
    """
    if not isinstance(data, (bytes, bytearray)):
        data = data.read()
    buf = _strip_planar_header(bytes(data))
    pos = 0
    record = 0
    while pos < len(buf):
        n = buf[pos]
        pos += 1
        if n == 0:
            raise MalformedPlanarCode("two-byte (wide) planar_code is not supported", record)
        order = []
        for v in range(n):
            nbrs = []
            while True:
                if pos >= len(buf):
                    raise MalformedPlanarCode(f"truncated at vertex {v + 1} of {n}", record)
                w = buf[pos]
                pos += 1
                if w == 0:
                    break
                if w > n:
                    raise MalformedPlanarCode(f"neighbour {w} exceeds vertex count {n}", record)
                nbrs.append(w - 1)
            order.append(tuple(nbrs))
        try:
            yield RotationSystem(tuple(order))
        except ValueError as exc:
            raise MalformedPlanarCode(str(exc), record) from exc
        record += 1


def write_planar_code(rotations: Iterable[RotationSystem], header: bool = True) -> bytes:
    out = bytearray(PLANAR_CODE_HEADERS[0] if header else b"")
    for rot in rotations:
        if rot.n > 255:
            raise ValueError("one-byte planar_code holds at most 255 vertices")
        out.append(rot.n)
        for nb in rot.order:
            out.extend(w + 1 for w in nb)
            out.append(0)
    return bytes(out)


# --------------------------------------------------------------------------
# canonical labelling
# --------------------------------------------------------------------------

def _refine(adj: tuple[frozenset[int], ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; cell order depends only on isomorphism-invariant data."""
    while True:
        cell_of = {}
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig: dict[tuple, list[int]] = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[cell_of[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            new_cells.extend(sig[key] for key in sorted(sig))
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _leaf_code(g: Graph, order: list[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    code = 0
    for u, v in g.edges:
        i, j = sorted((pos[u], pos[v]))
        # graph6 bit order: column j, row i
        code |= 1 << (g.n * (g.n - 1) // 2 - 1 - (j * (j - 1) // 2 + i))
    return code


def canonical_form(g: Graph) -> tuple[int, Graph]:
    """Return ``(code, relabelled graph)``; isomorphic graphs share both.

    The code is the largest graph6 adjacency bit-string over all leaves of an
    individualisation-refinement search.  The search tree is built from
    isomorphism-invariant choices, so its set of leaf codes is an invariant.
    """
    if g.n <= 1:
        return 0, Graph(g.n)
    adj = g.adj
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        if len(cells) == g.n:
            order = [c[0] for c in cells]
            code = _leaf_code(g, order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            return
        i = next(i for i, c in enumerate(cells) if len(c) > 1)
        for v in cells[i]:
            rest = [w for w in cells[i] if w != v]
            search(cells[:i] + [[v], rest] + cells[i + 1:])

    degree_cells: dict[int, list[int]] = {}
    for v in range(g.n):
        degree_cells.setdefault(len(adj[v]), []).append(v)
    search([degree_cells[d] for d in sorted(degree_cells)])
    order = best[1]
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return best[0], g.relabel(perm)


def canonical_key(g: Graph) -> tuple[int, int]:
    return (g.n, canonical_form(g)[0])


# --------------------------------------------------------------------------
# isomorph-free generation
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusFilter:
    max_n: int
    min_degree: int | None = None
    forbid_cycles: tuple[int, int] | None = None
    require_connected: bool = True
    require_planar: bool = False
    cap: int = GENERATION_CAP


def _path_lengths(g: Graph, limit: int) -> list[list[set[int]]]:
    """``out[a][b]``: lengths (in edges, up to ``limit``) of simple a-b paths."""
    out = [[set() for _ in range(g.n)] for _ in range(g.n)]
    adj = g.adj
    for a in range(g.n):
        seen = {a}

        def walk(u: int, length: int) -> None:
            for w in adj[u]:
                if w in seen:
                    continue
                out[a][w].add(length + 1)
                if length + 1 < limit:
                    seen.add(w)
                    walk(w, length + 1)
                    seen.discard(w)

        if limit >= 1:
            walk(a, 0)
    return out


def _is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return nx.check_planarity(g.to_networkx())[0]


def _extensions(parent: Graph, flt: CorpusFilter) -> Iterator[Graph]:
    """Children obtained by adding one vertex, pruned by the hereditary filters."""
    n = parent.n
    bad = [0] * n
    if flt.forbid_cycles is not None:
        lo, hi = flt.forbid_cycles
        # a new vertex joined to a and b closes cycles of length (a-b path) + 2
        plen = _path_lengths(parent, hi - 2)
        for a in range(n):
            for b in range(n):
                if a != b and any(lo <= L + 2 <= hi for L in plen[a][b]):
                    bad[a] |= 1 << b
    start = 1 if flt.require_connected or n == 0 else 0
    for mask in range(start, 1 << n):
        if any(mask >> a & 1 and bad[a] & mask for a in range(n)):
            continue
        nbrs = [a for a in range(n) if mask >> a & 1]
        child = Graph(n + 1, parent.edges + tuple((a, n) for a in nbrs))
        if flt.require_planar and not _is_planar(child):
            continue
        yield child


def enumerate_small_graphs(flt: CorpusFilter) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, for ``1 <= n <= max_n``.

    Every connected graph has a vertex whose removal leaves it connected, and
    planarity and forbidden cycle lengths survive vertex deletion, so growing
    accepted graphs one vertex at a time reaches every class.  Output is
    ordered by vertex count, then by canonical code.
    """
    if flt.max_n > flt.cap:
        raise CapExceeded(f"max_n={flt.max_n} exceeds generation cap {flt.cap}")
    level = {canonical_key(Graph(1)): Graph(1)} if flt.max_n >= 1 else {}
    for n in range(1, flt.max_n + 1):
        for key in sorted(level):
            g = level[key]
            if flt.min_degree is None or min(g.degrees(), default=0) >= flt.min_degree:
                yield g
        if n == flt.max_n:
            break
        nxt: dict[tuple[int, int], Graph] = {}
        for parent in level.values():
            for child in _extensions(parent, flt):
                code, canon = canonical_form(child)
                nxt.setdefault((child.n, code), canon)
        level = nxt


# --------------------------------------------------------------------------
# embeddings
# --------------------------------------------------------------------------

def _cyclic_orders(nbrs: list[int]) -> list[tuple[int, ...]]:
    """Every cyclic order, written starting from the least neighbour."""
    if len(nbrs) <= 2:
        return [tuple(nbrs)]
    first, rest = nbrs[0], nbrs[1:]
    return [(first,) + p for p in itertools.permutations(rest)]


def rotation_count(g: Graph) -> int:
    return math.prod(math.factorial(max(d - 1, 0)) for d in g.degrees())


def _insertion_order(g: Graph) -> list[tuple[int, int]]:
    """Edges ordered so the built subgraph stays connected and cycles close early.

    In each pair ``(u, v)``, ``u`` is already present; ``v`` may be new.
    """
    present = {0}
    remaining = set(g.edges)
    order = []
    while remaining:
        closing = sorted(uv for uv in remaining if uv[0] in present and uv[1] in present)
        if closing:
            order.extend(closing)
            remaining.difference_update(closing)
            continue
        frontier = {x for x in range(g.n) if x not in present and g.adj[x] & present}
        x = min(frontier, key=lambda x: (-len(g.adj[x] & present), x))
        s = min(g.adj[x] & present)
        order.append((s, x))
        remaining.discard((min(s, x), max(s, x)))
        present.add(x)
    return order


def _normalise(rot: list[list[int]]) -> RotationSystem:
    out = []
    for nb in rot:
        if nb:
            i = nb.index(min(nb))
            out.append(tuple(nb[i:] + nb[:i]))
        else:
            out.append(())
    return RotationSystem(tuple(out))


def _face_corners(rot: list[list[int]]) -> list[list[tuple[int, int]]]:
    """Faces as lists of corners ``(v, a)``: the angle at ``v`` just after neighbour ``a``."""
    seen = set()
    faces = []
    for x, nb in enumerate(rot):
        for y in nb:
            if (x, y) in seen:
                continue
            corners = []
            a, b = x, y
            while (a, b) not in seen:
                seen.add((a, b))
                corners.append((b, a))
                nbb = rot[b]
                a, b = b, nbb[(nbb.index(a) + 1) % len(nbb)]
            faces.append(corners)
    return faces


def enumerate_embeddings(
    g: Graph, genus0_only: bool = True, budget: int = 10**7
) -> Iterator[RotationSystem]:
    """Yield rotation systems of ``g``, each exactly once.

    Each vertex's cyclic order is written from its least neighbour, so the
    ``prod (deg - 1)!`` systems are distinct.  Without ``genus0_only`` all of
    them are produced and ``budget`` caps their number.

    With ``genus0_only`` edges are inserted one at a time into a growing
    plane embedding: an edge to a new vertex may enter any corner of its old
    endpoint, while an edge between present vertices must join two corners
    of one face.  Both moves keep Euler's relation, every plane embedding
    restricts to plane embeddings of the prefixes, and the restriction
    determines the insertion choices, so each plane embedding appears once.
    ``budget`` caps search nodes.
    """
    n = g.n
    if not genus0_only:
        options = [_cyclic_orders(sorted(nb)) for nb in g.adj]
        if rotation_count(g) > budget:
            raise BudgetExceeded(f"{rotation_count(g)} rotation systems exceed budget {budget}")
        for choice in itertools.product(*options):
            yield RotationSystem(tuple(choice))
        return
    if not g.is_connected():
        raise ValueError("plane embeddings need a connected graph")
    if n == 0:
        return
    order = _insertion_order(g)
    rot: list[list[int]] = [[] for _ in range(n)]
    nodes = 0

    def insert_after(v: int, a: int | None, w: int) -> None:
        if a is None:
            rot[v].append(w)
        else:
            rot[v].insert(rot[v].index(a) + 1, w)

    def search(i: int) -> Iterator[RotationSystem]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"embedding search exceeded {budget} nodes")
        if i == len(order):
            yield _normalise(rot)
            return
        u, v = order[i]
        if not rot[v]:
            # pendant edge to a new vertex
            corners = rot[u][:] if len(rot[u]) > 1 else [rot[u][0] if rot[u] else None]
            for a in corners:
                insert_after(u, a, v)
                rot[v].append(u)
                yield from search(i + 1)
                rot[v].pop()
                rot[u].remove(v)
            return
        for face in _face_corners(rot):
            at_u = [a for x, a in face if x == u]
            at_v = [b for x, b in face if x == v]
            for a in at_u:
                for b in at_v:
                    insert_after(u, a, v)
                    insert_after(v, b, u)
                    yield from search(i + 1)
                    rot[u].remove(v)
                    rot[v].remove(u)

    yield from search(0)


def plane_embeddings(g: Graph, budget: int = 10**7) -> list[RotationSystem]:
    """All genus-0 rotation systems of a connected graph."""
    return list(enumerate_embeddings(g, genus0_only=True, budget=budget))


def split_components(rot: RotationSystem) -> list[tuple[tuple[int, ...], RotationSystem]]:
    """Connected pieces of a rotation system as ``(original ids, relabelled rotation)``."""
    pieces = []
    for comp in rot.graph.components():
        index = {v: i for i, v in enumerate(comp)}
        pieces.append((tuple(comp), RotationSystem(tuple(
            tuple(index[w] for w in rot.order[v]) for v in comp
        ))))
    return pieces


def sphere_triangulation(n: int, seed: int | None = None) -> RotationSystem:
    """Plane triangulation from the convex hull of ``n`` random points on the sphere.

    Neighbours are ordered counter-clockwise as seen from outside.
    """
    import numpy as np
    from scipy.spatial import ConvexHull

    if n < 4:
        raise ValueError("need at least 4 points")
    rng = np.random.default_rng(seed)
    pts = rng.normal(size=(n, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    hull = ConvexHull(pts)
    if len(hull.vertices) != n:
        raise ValueError("degenerate point set")
    succ: list[dict[int, int]] = [{} for _ in range(n)]
    for tri, eq in zip(hull.simplices, hull.equations):
        a, b, c = (int(x) for x in tri)
        if np.cross(pts[b] - pts[a], pts[c] - pts[a]) @ eq[:3] < 0:
            b, c = c, b
        # counter-clockwise triangle a, b, c seen from outside
        succ[a][b], succ[b][c], succ[c][a] = c, a, b
    order = []
    for v in range(n):
        start = min(succ[v])
        cyc = [start]
        while succ[v][cyc[-1]] != start:
            cyc.append(succ[v][cyc[-1]])
        order.append(tuple(cyc))
    return RotationSystem(tuple(order))
