"""Property tests for the structural facts behind reduction and gluing.

The acceptance suite runs the same checks over the whole corpus; here they
are driven by hypothesis over fresh random graphs, plus a few fixed cases.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import lemma_checks
from wspm.cuts import edge_equivalence_classes
from wspm.families import h8, necklace, random_cubic, spliced, theta

graphs = st.one_of(
    st.builds(random_cubic, st.sampled_from([6, 8, 10, 12, 14, 16]), st.integers(0, 100_000)),
    st.builds(spliced, st.sampled_from([8, 12, 16, 20]), st.integers(0, 100_000)),
)


@pytest.mark.parametrize("name", sorted(lemma_checks.ALL))
@pytest.mark.parametrize("g", [theta(), h8(), necklace(3), necklace(5)], ids=["theta", "h8", "n3", "n5"])
def test_fixed_graphs(name, g):
    assert lemma_checks.ALL[name](g) == []


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_parity(g):
    assert lemma_checks.parity(g) == []


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_preservation(g):
    assert lemma_checks.preservation(g) == []


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_inheritance(g):
    assert lemma_checks.inheritance(g) == []


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_swap(g):
    assert lemma_checks.swap(g) == []


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_no_cut_straddles_both_sides(g):
    assert lemma_checks.no_straddling_cut(g) == []


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_split_cut_structure(g):
    assert lemma_checks.split_cut_structure(g) == []


def test_inheritance_is_exercised_on_necklaces():
    # six ordered triples in the single ring class of necklace(3)
    assert lemma_checks.inheritance(necklace(3)) == []
    assert [15, 16, 17] in edge_equivalence_classes(necklace(3))
