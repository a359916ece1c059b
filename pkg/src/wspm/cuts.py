"""Ground-truth connectivity predicates and enumerators.

Everything here is deliberately plain: component counts by traversal,
Tarjan bridges, unit-capacity augmenting paths.  The verifier is built on
these functions alone, so they must not borrow from the cactus-guided path.

Cut pairs and triples are sorted tuples of edge ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import Disconnected, HasBridge, SameVertex, TooLarge
from .graph import CubicGraph, connected_components

DEFAULT_CAP = 60

CutPair = tuple[int, int]
CutTriple = tuple[int, int, int]


@dataclass(frozen=True)
class LocalConnectivity:
    source: int
    sink: int
    value: int


def _n_components(g: CubicGraph, removed: Iterable[int] = ()) -> int:
    return len(connected_components(g, removed))


def bridges(g: CubicGraph, removed: Iterable[int] = ()) -> set[int]:
    """Bridges of ``g`` minus ``removed`` (iterative Tarjan, parallel-edge aware)."""
    skip = set(removed)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    found: set[int] = set()
    clock = 0
    for root in g.vertices():
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(g.incident(root)))]
        while stack:
            v, parent_edge, it = stack[-1]
            for e in it:
                if e == parent_edge or e in skip:
                    continue
                w = g.other(e, v)
                if w in disc:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(g.incident(w))))
                    break
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        found.add(parent_edge)
    return found


def is_bridge(g: CubicGraph, e: int) -> bool:
    g.require_live(e)
    return _n_components(g, (e,)) > _n_components(g)


def is_bridgeless(g: CubicGraph) -> bool:
    return not bridges(g)


def is_2_edge_cut(g: CubicGraph, e1: int, e2: int) -> bool:
    g.require_live(e1, e2)
    if e1 == e2:
        raise ValueError("a cut pair needs two distinct edges")
    base = _n_components(g)
    if _n_components(g, (e1, e2)) <= base:
        return False
    return _n_components(g, (e1,)) == base and _n_components(g, (e2,)) == base


def is_minimal_3_cut(g: CubicGraph, triple: Iterable[int]) -> bool:
    t = tuple(triple)
    g.require_live(*t)
    if len(set(t)) != 3:
        raise ValueError("a cut triple needs three distinct edges")
    base = _n_components(g)
    if _n_components(g, t) <= base:
        return False
    a, b, c = t
    for sub in ((a,), (b,), (c,), (a, b), (a, c), (b, c)):
        if _n_components(g, sub) > base:
            return False
    return True


def enumerate_2_edge_cuts(g: CubicGraph) -> list[CutPair]:
    """All 2-edge-cuts, sorted lexicographically by edge id."""
    base_bridges = bridges(g)
    out: list[CutPair] = []
    for e in g.edges():
        if e in base_bridges:
            continue
        for f in sorted(bridges(g, (e,)) - base_bridges):
            if f > e:
                out.append((e, f))
    return out


def enumerate_3_edge_cuts(g: CubicGraph, cap: int = DEFAULT_CAP) -> list[CutTriple]:
    """All inclusion-minimal 3-edge-cuts, sorted lexicographically.

    Raises :class:`TooLarge` above ``cap`` edges: the number of 3-cuts of a
    graph with 2-cuts can be exponential, so a silent partial answer would be
    worse than none.
    """
    if g.num_edges > cap:
        raise TooLarge(g.num_edges, cap)
    es = g.edges()
    base_bridges = bridges(g)
    pairs = set(enumerate_2_edge_cuts(g))
    usable = [e for e in es if e not in base_bridges]
    out: list[CutTriple] = []
    for i, x in enumerate(usable):
        for y in usable[i + 1:]:
            if (x, y) in pairs:
                continue
            for z in sorted(bridges(g, (x, y)) - base_bridges):
                if z > y and (x, z) not in pairs and (y, z) not in pairs:
                    out.append((x, y, z))
    return out


def local_edge_connectivity(
    g: CubicGraph, u: int, v: int, limit: int | None = None
) -> LocalConnectivity:
    """Maximum number of edge-disjoint u-v paths (unit-capacity max flow).

    ``limit`` stops augmenting once that many paths are found.
    """
    if u == v:
        raise SameVertex(f"source and sink are both {u}")
    if u not in g or v not in g:
        raise KeyError(u if u not in g else v)
    # flow[e] = +1 when e carries flow from ends(e)[0] to ends(e)[1]
    flow: dict[int, int] = {}
    value = 0
    while limit is None or value < limit:
        pred: dict[int, tuple[int, int]] = {u: (-1, -1)}
        queue = deque([u])
        while queue and v not in pred:
            x = queue.popleft()
            for e in g.incident(x):
                a, _ = g.ends(e)
                f = flow.get(e, 0)
                forward = 1 if x == a else -1
                if f * forward == 1:
                    continue  # saturated in this direction
                y = g.other(e, x)
                if y not in pred:
                    pred[y] = (e, forward)
                    queue.append(y)
        if v not in pred:
            break
        x = v
        while x != u:
            e, forward = pred[x]
            flow[e] = flow.get(e, 0) + forward
            x = g.other(e, x)
        value += 1
    return LocalConnectivity(u, v, value)


def three_edge_connected_components(g: CubicGraph) -> list[list[int]]:
    """Maximal vertex classes with pairwise local edge-connectivity >= 3.

    Classes are sorted internally and listed by smallest member.
    """
    if _n_components(g) > 1:
        raise Disconnected("3-edge-connected components need a connected graph")
    reps: list[int] = []
    classes: dict[int, list[int]] = {}
    for v in g.vertices():
        for r in reps:
            if local_edge_connectivity(g, r, v, limit=3).value >= 3:
                classes[r].append(v)
                break
        else:
            reps.append(v)
            classes[v] = [v]
    return [classes[r] for r in reps]


def edge_equivalence_classes(g: CubicGraph) -> list[list[int]]:
    """Partition of the live edges into classes of the 2-cut relation.

    Singletons are edges lying in no 2-edge-cut.
    """
    bad = bridges(g)
    if bad:
        raise HasBridge(min(bad))
    parent = {e: e for e in g.edges()}

    def find(e: int) -> int:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for a, b in enumerate_2_edge_cuts(g):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for e in g.edges():
        groups.setdefault(find(e), []).append(e)
    return sorted(groups.values())

