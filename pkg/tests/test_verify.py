import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from wspm.errors import TooLarge
from wspm.families import h8, k4, k33, necklace, petersen, random_cubic, spliced, theta
from wspm.graph import build_graph
from wspm.verify import all_wspms, count_wspms, perfect_matchings, verify_wspm


def prism():
    """Triangular prism: the three rungs form a nontrivial 3-edge-cut and a perfect matching."""
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def test_theta_single_edge_is_valid():
    assert verify_wspm(theta(), {0}).valid


def test_k4_partial_matching():
    rep = verify_wspm(k4(), {0})
    assert not rep.perfect and not rep.valid
    assert "vertex 2 is not covered" in rep.describe()


def test_h8_glued_matching_and_parity_violation():
    assert verify_wspm(h8(), {4, 9, 10, 11}).valid
    # no perfect matching meets a 2-cut once, so the offending set is also imperfect
    rep = verify_wspm(h8(), {10, 3, 8, 4})
    assert ((10, 11), 1) in rep.parity_violations
    assert not rep.perfect


def test_prism_rung_matching_meets_a_cut_three_times():
    g = prism()
    rep = verify_wspm(g, {6, 7, 8})
    assert rep.perfect
    assert ((6, 7, 8), 3) in rep.violations
    assert not rep.valid
    assert count_wspms(g) == 3


def test_unknown_edges_are_reported():
    rep = verify_wspm(k4(), {0, 5, 42})
    assert not rep.perfect
    assert any("42" in p for p in rep.problems)


def test_skipped_above_cap():
    g = necklace(20)
    rep = verify_wspm(g, set(), cap=60)
    assert rep.skipped and not rep.valid


def test_counts():
    assert count_wspms(theta()) == 3
    assert count_wspms(k4()) == 3
    assert count_wspms(petersen()) == 6
    assert count_wspms(k33()) == 6
    assert count_wspms(h8()) == len(oracles.wspms(h8()))


def test_count_cap():
    with pytest.raises(TooLarge):
        count_wspms(necklace(7))


@settings(max_examples=40, deadline=None)
@given(st.one_of(
    st.builds(random_cubic, st.sampled_from([4, 6, 8, 10]), st.integers(0, 10_000)),
    st.builds(spliced, st.sampled_from([6, 8, 10]), st.integers(0, 10_000)),
))
def test_enumeration_matches_brute_force(g):
    assert sorted(map(sorted, perfect_matchings(g))) == sorted(map(sorted, oracles.perfect_matchings(g)))
    assert sorted(map(sorted, all_wspms(g))) == sorted(map(sorted, oracles.wspms(g)))
    for m in oracles.perfect_matchings(g):
        assert verify_wspm(g, m).valid == oracles.is_wspm(g, m)
