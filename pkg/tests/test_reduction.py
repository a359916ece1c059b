import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wspm.cactus import build_cactus
from wspm.cuts import enumerate_2_edge_cuts, is_bridgeless, three_edge_connected_components
from wspm.errors import DeadEdge, LoopWouldForm, NotTwoCut
from wspm.families import h8, k4, necklace, random_cubic, spliced, theta
from wspm.graph import connected_components, require_cubic, split_on_edge_pair
from wspm.reduction import forward_phase, orient_cut, two_cut_reduce

graphs = st.one_of(
    st.builds(random_cubic, st.sampled_from([4, 6, 8, 10, 12, 14, 16]), st.integers(0, 10_000)),
    st.builds(spliced, st.sampled_from([6, 10, 14, 18, 24]), st.integers(0, 10_000)),
)


def plan_of(g):
    t, phi = build_cactus(g)
    return forward_phase(g, t, phi)


def test_orient_h8():
    assert orient_cut(h8(), 10, 11) == (0, 4, 1, 5)


def test_orient_swapped_inputs_keep_the_partition():
    u1, v1, u2, v2 = orient_cut(h8(), 11, 10)
    assert (u1, v1, u2, v2) == (1, 5, 0, 4)


def test_orient_necklace3_separates_block_zero():
    g = necklace(3)
    u1, v1, u2, v2 = orient_cut(g, 15, 17)
    # ring edge 15 = (1, 4) leaves block 0 at vertex 1; ring edge 17 = (9, 0) enters at vertex 0
    assert (u1, u2) == (1, 0)
    assert (v1, v2) == (4, 9)


def test_orient_rejects_non_cuts():
    with pytest.raises(NotTwoCut):
        orient_cut(k4(), 0, 5)
    with pytest.raises(NotTwoCut):
        orient_cut(h8(), 10, 10)
    g = h8()
    g.remove_edge(10)
    with pytest.raises(DeadEdge):
        orient_cut(g, 10, 11)


def test_reduce_h8_gives_two_k4s():
    g = h8()
    e1p, e2p = two_cut_reduce(g, 10, 11)
    assert (e1p, e2p) == (12, 13)
    assert g.ends(12) == (0, 1) and g.ends(13) == (4, 5)
    assert not g.is_live(10) and not g.is_live(11)
    a, b = split_on_edge_pair(g, 10, 11, e1p, e2p)
    for piece in (a, b):
        require_cubic(piece)
        assert len(three_edge_connected_components(piece)) == 1
        assert len(piece.edges()) == 6


def test_reduce_necklace2():
    g = necklace(2)
    e1p, e2p = two_cut_reduce(g, 10, 11)
    a, b = split_on_edge_pair(g, 10, 11, e1p, e2p)
    assert a.num_vertices == b.num_vertices == 4


def test_reduce_refuses_non_cut():
    with pytest.raises(NotTwoCut):
        two_cut_reduce(k4(), 0, 1)


def test_reduce_refuses_shared_endpoint():
    g = h8()
    with pytest.raises(LoopWouldForm):
        two_cut_reduce(g, 10, 11, (0, 4, 0, 5))


def test_forward_k4():
    plan = plan_of(k4())
    assert plan.k == 0
    assert plan.piece_sizes() == [4]
    assert plan.final_piece.frozen


def test_forward_h8():
    plan = plan_of(h8())
    assert plan.k == 1
    assert plan.piece_sizes() == [4, 4]
    r = plan.records[0]
    assert (r.index, {r.e1, r.e2}) == (1, {10, 11})
    assert r.e1p in plan.final_piece.edges()
    assert r.e2p in plan.pieces[r.separated].edges()


def test_forward_necklace3():
    plan = plan_of(necklace(3))
    assert plan.k == 2
    assert plan.piece_sizes() == [4, 4, 4]
    assert [r.sizes for r in plan.records] == [(8, 4), (4, 4)]


def test_forward_does_not_touch_its_inputs():
    g = necklace(4)
    t, phi = build_cactus(g)
    forward_phase(g, t, phi)
    assert g.num_edges == 24 and t.num_edges == 4


def test_reduction_error_on_theta_single_edge():
    g = theta()
    with pytest.raises(NotTwoCut):
        orient_cut(g, 0, 1)


@pytest.mark.parametrize("k", [2, 3, 8, 33])
def test_necklace_plans(k):
    plan = plan_of(necklace(k))
    assert plan.k == k - 1
    assert plan.piece_sizes() == [4] * k


@settings(max_examples=40, deadline=None)
@given(graphs)
def test_plan_invariants(g):
    steps = []
    t, phi = build_cactus(g)
    plan = forward_phase(g, t, phi, on_step=lambda s: steps.append(s.record.index))
    assert steps == list(range(1, plan.k + 1))
    assert len(plan.pieces) == plan.k + 1
    assert sum(plan.piece_sizes()) == g.num_vertices
    assert plan.k == t.num_edges - len({t.edge(c).cycle for c in t.edges()})
    ids = set()
    for piece in plan.pieces:
        require_cubic(piece)
        assert len(connected_components(piece)) == 1
        assert is_bridgeless(piece)
        assert enumerate_2_edge_cuts(piece) == []
        assert not ids & set(piece.edges())
        ids |= set(piece.edges())
    for r in plan.records:
        assert r.u1 != r.u2 and r.v1 != r.v2
        assert r.e2p in plan.pieces[r.separated].edges()
        assert r.e1 not in ids and r.e2 not in ids
