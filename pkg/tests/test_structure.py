import pytest
from hypothesis import given

from planecount.corpus import plane_embeddings
from planecount.graph import complete, cube, cycle, prism
from planecount.plane import build_plane_graph, counts
from planecount.structure import (
    adjacent_triangle_witness,
    adjacent_triangles_exist,
    count_triangles,
    cycle_lengths_present,
    find_cycle_of_length,
    forbidden_cycle_scan,
    has_cycle_of_length,
    is_cycle,
)

from conftest import graphs
from oracles import brute_cycle_lengths, brute_edge_in_two_triangles, brute_triangle_count


@pytest.mark.parametrize("g, expected", [(complete(4), True), (prism(), False), (cube(), False)])
def test_adjacent_triangles(g, expected):
    assert adjacent_triangles_exist(g) is expected


def test_witness_edge_lies_in_two_triangles():
    u, v = adjacent_triangle_witness(complete(4))
    assert len(complete(4).adj[u] & complete(4).adj[v]) == 2


@pytest.mark.parametrize("g, expected", [(complete(4), 4), (cube(), 0), (prism(), 2)])
def test_count_triangles(g, expected):
    assert count_triangles(g) == expected


def test_has_cycle_of_length():
    assert has_cycle_of_length(cycle(5), 5)
    assert not has_cycle_of_length(cycle(5), 4)
    assert has_cycle_of_length(complete(4), 4)
    assert find_cycle_of_length(cycle(5), 9) is None


def test_scan_cube():
    rep = forbidden_cycle_scan(cube(), 4, 11)
    assert rep.forbidden_lengths == [4, 6, 8]
    assert all(is_cycle(cube(), w) and len(w) == k for k, w in rep.forbidden_cycles_found)


def test_scan_triangle():
    rep = forbidden_cycle_scan(cycle(3), 4, 11)
    assert rep.forbidden_cycles_found == ()
    assert rep.min_degree == 2
    assert rep.connected and rep.triangle_count == 1


def test_scan_k4():
    rep = forbidden_cycle_scan(complete(4), 4, 11)
    assert rep.forbidden_lengths == [4]
    assert rep.has_adjacent_triangles


def test_scan_rejects_bad_range():
    with pytest.raises(ValueError):
        forbidden_cycle_scan(cube(), 5, 4)


@given(graphs(max_n=7))
def test_cycle_lengths_match_brute_force(g):
    found = cycle_lengths_present(g, 3, g.n)
    assert set(found) == brute_cycle_lengths(g.n, g.edges)
    for k, witness in found.items():
        assert len(witness) == k and is_cycle(g, witness)


@given(graphs(max_n=9))
def test_triangle_checks_match_brute_force(g):
    assert adjacent_triangles_exist(g) == brute_edge_in_two_triangles(g.n, g.edges)
    assert count_triangles(g) == brute_triangle_count(g.n, g.edges)


@given(graphs(max_n=9))
def test_no_four_cycle_means_no_shared_triangle_edge(g):
    if g.n >= 4 and not forbidden_cycle_scan(g, 4, 4).forbidden_cycles_found:
        assert not adjacent_triangles_exist(g)


def test_lone_triangle_has_two_facial_triangles_on_one_cycle():
    c = counts(build_plane_graph(plane_embeddings(cycle(3))[0]))
    assert (c.f3, c.e3) == (2, 3)


@given(graphs(min_n=4, max_n=7, connected=True))
def test_facial_triangles_are_edge_disjoint_without_shared_edges(g):
    # only C3 has one 3-cycle bounding two faces
    if adjacent_triangles_exist(g):
        return
    for rot in plane_embeddings(g)[:4]:
        c = counts(build_plane_graph(rot))
        assert 3 * c.f3 == c.e3
