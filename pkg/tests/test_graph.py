import pytest

from wspm.errors import ComponentCountMismatch, DeadEdge, InputError, NotCubic
from wspm.families import block, h8, k4, necklace, petersen, theta
from wspm.graph import (
    CubicGraph,
    build_graph,
    connected_components,
    is_connected,
    matching_is_perfect,
    require_cubic,
    split_on_edge_pair,
)
from wspm.reduction import two_cut_reduce


def test_build_assigns_ids_in_list_order():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.edges() == [0, 1, 2]
    assert g.ends(1) == (1, 2)
    assert g.num_vertices == 3 and g.num_edges == 3


def test_parallel_edges_are_distinct():
    g = theta()
    assert g.edges() == [0, 1, 2]
    assert all(g.ends(e) == (0, 1) for e in g.edges())
    assert g.degree(0) == g.degree(1) == 3


@pytest.mark.parametrize("n,edges", [(0, []), (2, [(0, 0)]), (2, [(0, 2)]), (2, [(-1, 1)])])
def test_build_rejects_bad_input(n, edges):
    with pytest.raises(InputError):
        build_graph(n, edges)


def test_require_cubic():
    for g in (theta(), k4(), petersen(), h8()):
        require_cubic(g)
    with pytest.raises(NotCubic) as info:
        require_cubic(block())
    assert info.value.vertex == 0 and info.value.degree == 2


def test_edge_arena_never_reuses_ids():
    g = k4()
    g.remove_edge(0)
    new = g.add_edge(0, 1)
    assert new == 6
    assert not g.is_live(0)
    assert g.ends(0) == (0, 1)  # dead edges keep their endpoints
    with pytest.raises(DeadEdge):
        g.require_live(0)


def test_frozen_graph_is_immutable():
    g = k4().freeze()
    with pytest.raises(Exception):
        g.add_edge(0, 1)
    c = g.copy()
    c.remove_edge(0)
    assert g.is_live(0)


def test_copy_is_independent():
    g = h8()
    c = g.copy()
    c.remove_edge(10)
    assert g.is_live(10) and not c.is_live(10)
    assert g.incident(0) != c.incident(0)


def test_components_and_connectivity():
    g = h8()
    assert is_connected(g)
    comps = connected_components(g, removed=(10, 11))
    assert sorted(map(sorted, comps)) == [[0, 1, 2, 3], [4, 5, 6, 7]]


def test_subgraph_keeps_ids():
    g = h8()
    s = g.subgraph([4, 5, 6, 7])
    assert s.edges() == [5, 6, 7, 8, 9]
    assert s.ends(5) == (4, 6)


def test_detach_moves_a_component():
    g = h8()
    g.remove_edge(10)
    g.remove_edge(11)
    g.add_edge(0, 1)
    g.add_edge(4, 5)
    piece = g.detach([4, 5, 6, 7])
    assert sorted(piece.vertices()) == [4, 5, 6, 7]
    assert sorted(g.vertices()) == [0, 1, 2, 3]
    require_cubic(piece)
    require_cubic(g)


def test_detach_refuses_a_non_component():
    with pytest.raises(ComponentCountMismatch):
        k4().detach([0, 1])


def test_split_h8_into_two_k4_shapes():
    g = h8()
    e1p, e2p = two_cut_reduce(g, 10, 11)
    a, b = split_on_edge_pair(g, 10, 11, e1p, e2p)
    assert a.num_vertices == b.num_vertices == 4
    assert e1p in a.edges() and e2p in b.edges()
    for piece in (a, b):
        require_cubic(piece)
        assert piece.frozen


def test_split_necklace3_sizes():
    g = necklace(3)
    ring = [15, 16, 17]  # block i's vertex 1 to block i+1's vertex 0
    e1p, e2p = two_cut_reduce(g, ring[0], ring[2])
    a, b = split_on_edge_pair(g, ring[0], ring[2], e1p, e2p)
    assert sorted((a.num_vertices, b.num_vertices)) == [4, 8]


def test_split_without_a_cut_fails():
    g = theta()
    g.remove_edge(0)
    g.add_edge(0, 1)
    with pytest.raises(ComponentCountMismatch):
        split_on_edge_pair(g, 0, 1, 3, 3)


def test_matching_is_perfect():
    g = k4()
    assert matching_is_perfect(g, {0, 5})
    assert not matching_is_perfect(g, {0, 1})
    assert not matching_is_perfect(g, {0})


def test_empty_graph_object():
    g = CubicGraph()
    assert g.num_vertices == 0 and g.edges() == []
    with pytest.raises(InputError):
        g.add_edge(0, 1)
    g.add_vertex(0)
    g.add_vertex(1)
    assert g.add_edge(0, 1) == 0
    assert g.vertices() == [0, 1]
