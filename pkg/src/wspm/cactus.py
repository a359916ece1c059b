"""Cactus model of the 2-edge-cuts of a bridgeless cubic graph.

Nodes are the 3-edge-connected components of the graph; each cactus edge
stands for exactly one external graph edge (endpoints in different
components) and carries the id of the cycle it lies on.  Two graph edges
form a 2-edge-cut iff their cactus edges share a cycle id.

The degree-2 nodes are tracked incrementally: a set for membership plus a
min-heap with lazy deletion, so the forward phase can always take the
lowest such node.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .cuts import DEFAULT_CAP, bridges, edge_equivalence_classes, enumerate_2_edge_cuts
from .cuts import three_edge_connected_components
from .errors import Disconnected, HasBridge, NotCactus, NotCactusCut, NotDegree2
from .errors import RepresentationGap
from .graph import CubicGraph, is_connected

Phi = dict[int, int]


@dataclass(frozen=True, slots=True)
class CactusEdge:
    x: int
    y: int
    graph_edge: int | None
    cycle: int | None

    def other(self, node: int) -> int:
        return self.y if node == self.x else self.x


class Cactus:
    """Mutable cactus with per-node member lists and a degree-2 tracker."""

    def __init__(self) -> None:
        self.members: dict[int, list[int]] = {}
        self._inc: dict[int, list[int]] = {}
        self._edges: dict[int, CactusEdge] = {}
        self._next_edge = 0
        self._next_cycle = 0
        self._deg2: set[int] = set()
        self._pending: list[int] = []  # LIFO of degree-2 candidates, stale entries skipped lazily
        self.ops = 0

    # mutation -------------------------------------------------------------

    def add_node(self, x: int, members: Iterable[int]) -> None:
        self.members[x] = list(members)
        self._inc[x] = []
        self._touch(x)

    def remove_node(self, x: int) -> list[int]:
        if self._inc[x]:
            raise NotCactus(f"node {x} still has incident edges")
        del self._inc[x]
        self._deg2.discard(x)
        self.ops += 1
        return self.members.pop(x)

    def add_edge(self, x: int, y: int, graph_edge: int | None, cycle: int | None) -> int:
        if x == y:
            raise NotCactus(f"loop at node {x}")
        c = self._next_edge
        self._next_edge += 1
        self._edges[c] = CactusEdge(x, y, graph_edge, cycle)
        self._inc[x].append(c)
        self._inc[y].append(c)
        if cycle is not None and cycle >= self._next_cycle:
            self._next_cycle = cycle + 1
        self._touch(x)
        self._touch(y)
        self.ops += 1
        return c

    def remove_edge(self, c: int) -> CactusEdge:
        ce = self._edges.pop(c)
        self._inc[ce.x].remove(c)
        self._inc[ce.y].remove(c)
        self._touch(ce.x)
        self._touch(ce.y)
        self.ops += 1
        return ce

    def _touch(self, x: int) -> None:
        if len(self._inc[x]) == 2:
            if x not in self._deg2:
                self._deg2.add(x)
                self._pending.append(x)
        else:
            self._deg2.discard(x)

    def reduce_at(self, x: int, new_graph_edge: int | None) -> tuple[int, int, int | None]:
        """In-place ``{a, b}``-reduction at a degree-2 node ``x``.

        Removes both edges at ``x`` and detaches ``x``; its neighbours ``y``
        and ``z`` get a new edge on the same cycle standing for
        ``new_graph_edge``, unless ``y == z`` and the new edge would be a
        loop, which is dropped.  Returns ``(a, b, new cactus edge or None)``.
        Constant work.
        """
        a, b = self.incident_pair(x)
        ea, eb = self._edges[a], self._edges[b]
        if ea.cycle is None or ea.cycle != eb.cycle:
            raise NotCactusCut(f"edges {a} and {b} at node {x} share no cycle")
        y, z = ea.other(x), eb.other(x)
        self.remove_edge(a)
        self.remove_edge(b)
        new = None
        if y != z:
            new = self.add_edge(y, z, new_graph_edge, ea.cycle)
        return a, b, new

    # queries --------------------------------------------------------------

    def nodes(self) -> list[int]:
        return sorted(self._inc)

    def edges(self) -> list[int]:
        return sorted(self._edges)

    def edge(self, c: int) -> CactusEdge:
        return self._edges[c]

    def incident(self, x: int) -> list[int]:
        return self._inc[x]

    def degree(self, x: int) -> int:
        return len(self._inc[x])

    def incident_pair(self, x: int) -> tuple[int, int]:
        if x not in self._inc or len(self._inc[x]) != 2:
            raise NotDegree2(f"node {x} does not have cactus degree 2")
        a, b = sorted(self._inc[x])
        return a, b

    @property
    def num_nodes(self) -> int:
        return len(self._inc)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def degree2(self) -> list[int]:
        return sorted(self._deg2)

    def next_degree2(self) -> int | None:
        """Some degree-2 node in O(1) amortized time, or None.

        Nodes are handed out last-in first-out; a fresh copy starts from the
        lowest id, so runs are deterministic.
        """
        stack = self._pending
        while stack and stack[-1] not in self._deg2:
            stack.pop()
            self.ops += 1
        return stack[-1] if stack else None

    def phi(self) -> Phi:
        return {v: x for x, vs in self.members.items() for v in vs}

    def copy(self) -> "Cactus":
        t = Cactus()
        t.members = {x: list(vs) for x, vs in self.members.items()}
        t._inc = {x: list(cs) for x, cs in self._inc.items()}
        t._edges = dict(self._edges)
        t._next_edge = self._next_edge
        t._next_cycle = self._next_cycle
        t._deg2 = set(self._deg2)
        t._pending = sorted(self._deg2, reverse=True)
        return t

    def restrict(self, nodes: Iterable[int]) -> "Cactus":
        """The sub-cactus induced on ``nodes`` with ids preserved."""
        keep = set(nodes)
        t = Cactus()
        for x in sorted(keep):
            t.add_node(x, self.members[x])
        for c in self.edges():
            ce = self._edges[c]
            if ce.x in keep and ce.y in keep:
                t._edges[c] = ce
                t._inc[ce.x].append(c)
                t._inc[ce.y].append(c)
        for x in keep:
            t._touch(x)
        t._next_edge = self._next_edge
        t._next_cycle = self._next_cycle
        t.ops = 0
        return t

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        skip = set(removed)
        seen: set[int] = set()
        out = []
        for s in self.nodes():
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for c in self._inc[x]:
                    if c in skip:
                        continue
                    y = self._edges[c].other(x)
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            out.append(sorted(comp))
        return out

    def __repr__(self) -> str:
        return f"Cactus(nodes={self.num_nodes}, edges={self.num_edges})"


# construction -------------------------------------------------------------


def _assemble(g: CubicGraph, comps: list[list[int]], cycle_of: dict[int, int]) -> tuple[Cactus, Phi]:
    comps = sorted(sorted(c) for c in comps)
    t = Cactus()
    phi: Phi = {}
    for x, comp in enumerate(comps):
        t.add_node(x, comp)
        for v in comp:
            phi[v] = x
    for e in g.edges():
        u, v = g.ends(e)
        if phi[u] != phi[v]:
            if e not in cycle_of:
                raise NotCactus(f"external edge {e} lies in no 2-edge-cut")
            t.add_edge(phi[u], phi[v], e, cycle_of[e])
        elif e in cycle_of:
            raise NotCactus(f"edge {e} lies in a 2-edge-cut but is internal")
    t.ops = 0
    return t, phi


def _number_cycles(classes: Iterable[Iterable[int]]) -> dict[int, int]:
    nontrivial = sorted(sorted(c) for c in classes if len(list(c)) > 1)
    return {e: i for i, cls in enumerate(nontrivial) for e in cls}


def _build_by_oracle(g: CubicGraph) -> tuple[Cactus, Phi]:
    comps = three_edge_connected_components(g)
    cycle_of = _number_cycles(edge_equivalence_classes(g))
    return _assemble(g, comps, cycle_of)


def _build_by_labels(g: CubicGraph, seed: int = 0x2C07) -> tuple[Cactus, Phi]:
    """Near-linear construction from a DFS tree and random XOR cycle labels.

    Each non-tree edge gets a random 128-bit label; a tree edge gets the XOR
    of the labels of the back edges spanning it.  Two edges form a 2-edge-cut
    iff their labels agree (a label of 0 marks a bridge).  Because every
    non-tree edge of a DFS tree is a back edge, the tree edges of one class
    lie on a single root-leaf path and the class has at most one non-tree
    edge.  Deleting a class leaves a ring of segments; joining, inside each
    segment, the two ends of its boundary class edges and then taking
    components over all such joins plus the single-class edges yields the
    3-edge-connected components.
    """
    rng = random.Random(seed)
    order: list[int] = []
    parent_edge: dict[int, int] = {}
    depth: dict[int, int] = {}
    acc: dict[int, int] = {}
    label: dict[int, int] = {}
    root = g.vertices()[0]
    depth[root] = 0
    parent_edge[root] = -1
    stack = [(root, iter(g.incident(root)))]
    order.append(root)
    while stack:
        v, it = stack[-1]
        for e in it:
            if e == parent_edge[v] or e in label:
                continue
            w = g.other(e, v)
            if w in depth:
                if depth[w] < depth[v]:
                    label[e] = rng.getrandbits(128)
                continue
            depth[w] = depth[v] + 1
            parent_edge[w] = e
            order.append(w)
            stack.append((w, iter(g.incident(w))))
            break
        else:
            stack.pop()
    if len(order) != g.num_vertices:
        raise Disconnected("cactus construction needs a connected graph")
    for v in order:
        acc[v] = 0
    for e, r in label.items():
        a, b = g.ends(e)
        acc[a] ^= r
        acc[b] ^= r
    for v in reversed(order[1:]):
        pe = parent_edge[v]
        label[pe] = acc[v]
        if acc[v] == 0:
            raise HasBridge(pe)
        acc[g.other(pe, v)] ^= acc[v]

    by_label: dict[int, list[int]] = {}
    for e in g.edges():
        by_label.setdefault(label[e], []).append(e)

    uf = {v: v for v in order}

    def find(v: int) -> int:
        while uf[v] != v:
            uf[v] = uf[uf[v]]
            v = uf[v]
        return v

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            uf[ra] = rb

    def lower_upper(e: int) -> tuple[int, int]:
        a, b = g.ends(e)
        return (a, b) if depth[a] > depth[b] else (b, a)

    classes = []
    for cls in by_label.values():
        if len(cls) == 1:
            union(*g.ends(cls[0]))
            continue
        classes.append(cls)
        tree = sorted((e for e in cls if parent_edge[lower_upper(e)[0]] == e),
                      key=lambda e: depth[lower_upper(e)[0]])
        back = [e for e in cls if parent_edge[lower_upper(e)[0]] != e]
        if len(back) > 1:
            raise NotCactus("label collision: two back edges share a class")
        for upper_edge, lower_edge in zip(tree, tree[1:]):
            union(lower_upper(upper_edge)[0], lower_upper(lower_edge)[1])
        top_parent = lower_upper(tree[0])[1]
        bottom_child = lower_upper(tree[-1])[0]
        if back:
            desc, anc = lower_upper(back[0])
            union(top_parent, anc)
            union(bottom_child, desc)
        else:
            union(top_parent, bottom_child)

    groups: dict[int, list[int]] = {}
    for v in order:
        groups.setdefault(find(v), []).append(v)
    return _assemble(g, list(groups.values()), _number_cycles(classes))


def build_cactus(g: CubicGraph, method: str = "auto", cap: int = DEFAULT_CAP) -> tuple[Cactus, Phi]:
    """Cactus model ``(T, phi)`` of all 2-edge-cuts of ``g``.

    ``method="oracle"`` derives the nodes from pairwise max-flow and the
    cycles from brute-force 2-cut enumeration; ``"labels"`` is the
    near-linear construction.  ``"auto"`` uses the oracle up to ``cap``
    edges and labels above it.
    """
    if not is_connected(g):
        raise Disconnected("cactus construction needs a connected graph")
    if method == "auto":
        method = "oracle" if g.num_edges <= cap else "labels"
    if method == "oracle":
        bad = bridges(g)
        if bad:
            raise HasBridge(min(bad))
        t, phi = _build_by_oracle(g)
    elif method == "labels":
        t, phi = _build_by_labels(g)
    else:
        raise ValueError(f"unknown cactus construction method {method!r}")
    check_cactus(t)
    return t, phi


# invariants ---------------------------------------------------------------


def check_cactus(t: Cactus) -> None:
    """Raise :class:`NotCactus` unless ``t`` is a well-formed cactus.

    Checked: connected; no loops; each cycle id labels the edges of one
    simple cycle (2-cycles allowed); edges without a cycle id are bridges;
    the cyclomatic number equals the number of cycles, which forces every
    edge onto at most one cycle; ``|E| <= 2(|V|-1)``; the degree-2 tracker
    matches the true degrees.
    """
    if t.num_nodes == 0:
        raise NotCactus("empty cactus")
    if len(t.components()) != 1:
        raise NotCactus("cactus is disconnected")
    cycles: dict[int, list[int]] = {}
    for c in t.edges():
        ce = t.edge(c)
        if ce.x == ce.y:
            raise NotCactus(f"loop edge {c}")
        if ce.cycle is None:
            if len(t.components((c,))) == 1:
                raise NotCactus(f"edge {c} has no cycle id but is not a bridge")
        else:
            cycles.setdefault(ce.cycle, []).append(c)
    for cid, cs in cycles.items():
        adj: dict[int, list[int]] = {}
        for c in cs:
            ce = t.edge(c)
            adj.setdefault(ce.x, []).append(ce.y)
            adj.setdefault(ce.y, []).append(ce.x)
        if len(cs) < 2 or any(len(ys) != 2 for ys in adj.values()) or len(adj) != len(cs):
            raise NotCactus(f"cycle {cid} is not a simple cycle")
        start = t.edge(cs[0]).x
        seen = {start}
        frontier = [start]
        while frontier:
            for y in adj[frontier.pop()]:
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        if len(seen) != len(adj):
            raise NotCactus(f"cycle {cid} splits into several cycles")
    if t.num_edges - t.num_nodes + 1 != len(cycles):
        raise NotCactus("some edge lies on more than one cycle")
    if t.num_edges > 2 * (t.num_nodes - 1):
        raise NotCactus(f"{t.num_edges} edges on {t.num_nodes} nodes breaks |E| <= 2(|V|-1)")
    actual = sorted(x for x in t.nodes() if t.degree(x) == 2)
    if actual != t.degree2():
        raise NotCactus("degree-2 list is stale")


def _delta(g: CubicGraph, side: set[int]) -> tuple[int, ...]:
    return tuple(sorted(e for e in g.edges() if (g.ends(e)[0] in side) != (g.ends(e)[1] in side)))


def validate_representation(g: CubicGraph, t: Cactus, phi: Phi) -> None:
    """Check that ``(t, phi)`` represents exactly the 2-edge-cuts of ``g``.

    Both directions are checked by enumeration: every minimum cut of the
    cactus pulls back to a 2-edge-cut of ``g`` with the recorded graph edges,
    and every 2-edge-cut of ``g`` arises that way.  The cactus edges must
    also be in bijection with the external edges.  Desk scale only.
    """
    vs = set(g.vertices())
    if set(phi) != vs:
        raise RepresentationGap("phi is not a total map on the graph's vertices")
    image = set(phi.values())
    if image != set(t.nodes()):
        raise RepresentationGap("cactus has empty nodes or phi maps outside it")
    for x in t.nodes():
        if sorted(t.members[x]) != sorted(v for v in vs if phi[v] == x):
            raise RepresentationGap(f"member list of node {x} disagrees with phi")
    try:
        check_cactus(t)
    except NotCactus as exc:
        raise RepresentationGap(f"not a cactus: {exc}") from exc

    external = {e for e in g.edges() if phi[g.ends(e)[0]] != phi[g.ends(e)[1]]}
    mapped: dict[int, int] = {}
    for c in t.edges():
        ce = t.edge(c)
        e = ce.graph_edge
        if e is None or not g.is_live(e):
            raise RepresentationGap(f"cactus edge {c} has no live graph edge")
        if {phi[v] for v in g.ends(e)} != {ce.x, ce.y}:
            raise RepresentationGap(f"cactus edge {c} does not match graph edge {e}")
        if e in mapped.values():
            raise RepresentationGap(f"graph edge {e} is used by two cactus edges")
        mapped[c] = e
    if set(mapped.values()) != external:
        missing = sorted(external - set(mapped.values()))
        raise RepresentationGap(f"external edges without a cactus edge: {missing}")

    cedges = t.edges()
    for c in cedges:
        if len(t.components((c,))) > 1:
            raise RepresentationGap(f"cactus edge {c} is a bridge: a cut of size 1 in the model")
    from_cactus: set[tuple[int, int]] = set()
    for i, c in enumerate(cedges):
        for d in cedges[i + 1:]:
            comps = t.components((c, d))
            if len(comps) < 2:
                continue
            side = {v for x in comps[0] for v in t.members[x]}
            pair = tuple(sorted((mapped[c], mapped[d])))
            if _delta(g, side) != pair:
                raise RepresentationGap(f"cactus cut {{{c}, {d}}} pulls back to {_delta(g, side)}, not {pair}")
            from_cactus.add(pair)  # type: ignore[arg-type]
    from_graph = set(enumerate_2_edge_cuts(g))
    if from_cactus - from_graph:
        raise RepresentationGap(f"cactus cut {sorted(from_cactus - from_graph)[0]} is not a 2-edge-cut of G")
    if from_graph - from_cactus:
        raise RepresentationGap(f"2-edge-cut {sorted(from_graph - from_cactus)[0]} of G is not represented")


# operations used by the reduction loop ------------------------------------


def degree2_nodes(t: Cactus) -> list[int]:
    return t.degree2()


def pick_cut_at(t: Cactus, x: int) -> tuple[int, int, int, int]:
    """The cactus edges ``a < b`` at degree-2 node ``x`` and their graph edges."""
    a, b = t.incident_pair(x)
    e1, e2 = t.edge(a).graph_edge, t.edge(b).graph_edge
    assert e1 is not None and e2 is not None
    return a, b, e1, e2


def cactus_reduce(
    t: Cactus, a: int, b: int, graph_a: int | None = None, graph_b: int | None = None
) -> tuple[Cactus, Cactus]:
    """General ``{a, b}``-reduction of a cactus, returning two new cacti.

    With ``a = x1y1`` and ``b = x2y2`` and ``x1, x2`` on one side, the side
    of ``x1`` gets ``a' = x1x2`` (standing for ``graph_a``) and the other
    side ``b' = y1y2`` (for ``graph_b``); loops are dropped.  ``t`` itself
    is not modified.
    """
    ea, eb = t.edge(a), t.edge(b)
    if a == b or ea.cycle is None or ea.cycle != eb.cycle:
        raise NotCactusCut(f"cactus edges {a} and {b} do not lie on a common cycle")
    comps = t.components((a, b))
    if len(comps) != 2:
        raise NotCactusCut(f"removing {a} and {b} leaves {len(comps)} components")
    side1 = set(comps[0]) if ea.x in comps[0] else set(comps[1])
    x1, y1 = ea.x, ea.y
    x2, y2 = (eb.x, eb.y) if eb.x in side1 else (eb.y, eb.x)
    work = t.copy()
    work.remove_edge(a)
    work.remove_edge(b)
    if x1 != x2:
        work.add_edge(x1, x2, graph_a, ea.cycle)
    if y1 != y2:
        work.add_edge(y1, y2, graph_b, ea.cycle)
    t1 = work.restrict(side1)
    t2 = work.restrict(set(work.nodes()) - side1)
    return t1, t2


def to_dot(t: Cactus, name: str = "cactus") -> str:
    lines = [f"graph {name} {{"]
    for x in t.nodes():
        members = " ".join(map(str, t.members[x]))
        lines.append(f'  n{x} [label="{x}: {members}"];')
    for c in t.edges():
        ce = t.edge(c)
        lines.append(f'  n{ce.x} -- n{ce.y} [label="c{c} e{ce.graph_edge} cyc{ce.cycle}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
