"""Property checks for the structural facts the reduction relies on.

Each function takes one bridgeless cubic graph and returns a list of
counterexample descriptions; an empty list means the property held.
"""

from __future__ import annotations

from itertools import permutations

from wspm.cuts import edge_equivalence_classes, enumerate_2_edge_cuts, enumerate_3_edge_cuts, is_2_edge_cut
from wspm.cuts import is_bridgeless, is_minimal_3_cut
from wspm.graph import connected_components, is_connected, split_on_edge_pair
from wspm.reduction import orient_cut, two_cut_reduce
from wspm.verify import perfect_matchings


def reduce_copy(g, e1, e2):
    """Reduce a copy of ``g`` at ``{e1, e2}``; returns (G1, G2, e1p, e2p, orientation)."""
    h = g.copy()
    orientation = orient_cut(h, e1, e2)
    e1p, e2p = two_cut_reduce(h, e1, e2, orientation)
    g1, g2 = split_on_edge_pair(h, e1, e2, e1p, e2p)
    return g1, g2, e1p, e2p, orientation


def side_edges(g, e1, e2):
    """Edge sets of the two components of ``g - {e1, e2}``, side of ``e1``'s first end first."""
    comps = connected_components(g, (e1, e2))
    u1 = g.ends(e1)[0]
    comps.sort(key=lambda c: u1 not in c)
    out = []
    for comp in comps:
        vs = set(comp)
        out.append({e for e in g.edges() if e not in (e1, e2) and g.ends(e)[0] in vs})
    return out


def parity(g):
    cuts2 = enumerate_2_edge_cuts(g)
    bad = []
    for m in perfect_matchings(g):
        for c in cuts2:
            k = sum(e in m for e in c)
            if k not in (0, 2):
                bad.append(f"matching {sorted(m)} meets 2-cut {c} in {k}")
    return bad


def preservation(g):
    bad = []
    for e1, e2 in enumerate_2_edge_cuts(g):
        g1, g2, *_ = reduce_copy(g, e1, e2)
        for piece in (g1, g2):
            if any(piece.degree(v) != 3 for v in piece.vertices()):
                bad.append(f"reducing {(e1, e2)} gives a non-cubic piece")
            if not is_connected(piece) or not is_bridgeless(piece):
                bad.append(f"reducing {(e1, e2)} gives a piece with a bridge")
    return bad


def inheritance(g):
    bad = []
    for cls in edge_equivalence_classes(g):
        if len(cls) < 3:
            continue
        for e1, e2, e3 in permutations(cls, 3):
            g1, g2, e2p, e3p, _ = reduce_copy(g, e2, e3)
            piece, new = (g1, e2p) if e1 in g1.edges() else (g2, e3p)
            if not is_2_edge_cut(piece, e1, new):
                bad.append(f"after reducing {(e2, e3)}, {(e1, new)} is not a 2-cut")
    return bad


def swap(g):
    cuts3 = set(enumerate_3_edge_cuts(g))
    bad = []
    for e1, e2 in enumerate_2_edge_cuts(g):
        for a, b in ((e1, e2), (e2, e1)):
            for c in cuts3:
                if a in c:
                    swapped = tuple(sorted({b} | (set(c) - {a})))
                    if swapped not in cuts3:
                        bad.append(f"{c} is a 3-cut but {swapped} is not")
    return bad


def no_straddling_cut(g):
    cuts3 = enumerate_3_edge_cuts(g)
    bad = []
    for e1, e2 in enumerate_2_edge_cuts(g):
        s1, s2 = side_edges(g, e1, e2)
        for c in cuts3:
            rest = set(c) - {e1, e2}
            if len(rest) == 2 and len(rest & s1) == 1 and len(rest & s2) == 1:
                bad.append(f"3-cut {c} uses one of {(e1, e2)} and one edge from each side")
    return bad


def split_cut_structure(g):
    """Split 3-cuts: the lone edge pairs with the new edge of its piece to form a 2-cut."""
    cuts3 = enumerate_3_edge_cuts(g)
    bad = []
    for e1, e2 in enumerate_2_edge_cuts(g):
        g1, g2, e1p, e2p, _ = reduce_copy(g, e1, e2)
        p1, p2 = set(g1.edges()), set(g2.edges())
        for c in cuts3:
            if e1 in c or e2 in c:
                continue
            in1 = [f for f in c if f in p1]
            in2 = [f for f in c if f in p2]
            if len(in1) == 2 and len(in2) == 1:
                (f3,), pair, lone_piece, new_lone, other, new_other = in2, in1, g2, e2p, g1, e1p
            elif len(in2) == 2 and len(in1) == 1:
                (f3,), pair, lone_piece, new_lone, other, new_other = in1, in2, g1, e1p, g2, e2p
            else:
                continue
            if not is_2_edge_cut(lone_piece, f3, new_lone):
                bad.append(f"3-cut {c}: {(f3, new_lone)} is not a 2-cut of its piece")
            if not is_minimal_3_cut(other, (*pair, new_other)):
                bad.append(f"3-cut {c}: {(*pair, new_other)} is not a 3-cut of the other piece")
    return bad


ALL = {
    "parity": parity,
    "preservation": preservation,
    "inheritance": inheritance,
    "swap": swap,
    "no_straddling_cut": no_straddling_cut,
    "split_cut_structure": split_cut_structure,
}
