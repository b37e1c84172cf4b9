"""Independent brute-force oracles; none of these call the code under test."""

from __future__ import annotations

import itertools

import networkx as nx
import numpy as np


def brute_cycle_lengths(n, edges):
    """All simple cycle lengths, by trying every vertex sequence."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    found = set()
    for k in range(3, n + 1):
        for combo in itertools.combinations(range(n), k):
            first = combo[0]
            for rest in itertools.permutations(combo[1:]):
                seq = (first,) + rest
                if all(seq[(i + 1) % k] in adj[seq[i]] for i in range(k)):
                    found.add(k)
                    break
            if k in found:
                break
    return found


def brute_three_colorable(n, edges, k=3):
    """Feasibility over all k**n assignments, vectorised."""
    if n == 0:
        return True
    grid = np.indices((k,) * n).reshape(n, -1).T
    ok = np.ones(len(grid), dtype=bool)
    for u, v in edges:
        ok &= grid[:, u] != grid[:, v]
    return bool(ok.any())


def brute_edge_in_two_triangles(n, edges):
    es = {frozenset(e) for e in edges}
    tris = [t for t in itertools.combinations(range(n), 3)
            if all(frozenset(p) in es for p in itertools.combinations(t, 2))]
    for a, b in itertools.combinations(tris, 2):
        if len(set(a) & set(b)) == 2:
            return True
    return False


def brute_triangle_count(n, edges):
    es = {frozenset(e) for e in edges}
    return sum(1 for t in itertools.combinations(range(n), 3)
               if all(frozenset(p) in es for p in itertools.combinations(t, 2)))


def mirror_face_lengths(order):
    """Face walk with the predecessor convention, on (tail, head) pairs."""
    pos = [{w: i for i, w in enumerate(nb)} for nb in order]
    darts = {(u, v) for u, nb in enumerate(order) for v in nb}
    lengths = []
    while darts:
        start = d = min(darts)
        k = 0
        while True:
            darts.discard(d)
            k += 1
            u, v = d
            nb = order[v]
            d = (v, nb[(pos[v][u] - 1) % len(nb)])
            if d == start:
                break
        lengths.append(k)
    return sorted(lengths)


def convex_rotation(points, edges):
    """Rotation of a convex polytope's 1-skeleton, counter-clockwise from outside."""
    pts = np.asarray(points, dtype=float)
    pts = pts - pts.mean(axis=0)
    n = len(pts)
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    order = []
    for v in range(n):
        p = pts[v] / np.linalg.norm(pts[v])
        ref = np.array([1.0, 0.0, 0.0]) if abs(p[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
        e1 = np.cross(p, ref)
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(p, e1)
        order.append(sorted(nbrs[v], key=lambda w: np.arctan2((pts[w] - pts[v]) @ e2, (pts[w] - pts[v]) @ e1)))
    return order


def nx_planar(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.check_planarity(g)[0]


def atlas_connected_counts(max_n=7):
    """Connected isomorphism classes per vertex count from networkx's graph atlas."""
    counts = {}
    for g in nx.graph_atlas_g():
        k = g.number_of_nodes()
        if 1 <= k <= max_n and nx.is_connected(g):
            counts[k] = counts.get(k, 0) + 1
    return counts


def atlas_graphs(max_n=6):
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() <= max_n:
            yield g
