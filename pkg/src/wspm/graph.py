"""Multigraph storage with stable vertex and edge identities.

Edges live in an arena keyed by a monotonically increasing integer id.
Removing an edge only marks it dead, so ids recorded anywhere else (reduction
records, matchings, traces) keep resolving to their endpoints for the whole
run.  Incidence lists store edge ids, never endpoint pairs, which makes
parallel edges first-class.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import ComponentCountMismatch, DeadEdge, InputError, NotCubic

Matching = set[int]


class CubicGraph:
    """A loopless multigraph whose live vertices are meant to have degree 3.

    Cubicity is not enforced on construction (the verifier accepts arbitrary
    inputs); call :func:`require_cubic` where it matters.

    ``ops`` counts primitive mutations and traversal steps.  The forward
    reduction phase reports it to show that its work grows linearly.
    """

    __slots__ = ("_ends", "_live", "_inc", "_next_edge", "_frozen", "ops")

    def __init__(self) -> None:
        self._ends: dict[int, tuple[int, int]] = {}
        self._live: dict[int, None] = {}
        self._inc: dict[int, list[int]] = {}
        self._next_edge = 0
        self._frozen = False
        self.ops = 0

    # construction ---------------------------------------------------------

    def add_vertex(self, v: int) -> None:
        self._check_mutable()
        if v in self._inc:
            raise InputError(f"vertex {v} already present")
        self._inc[v] = []

    def add_edge(self, u: int, v: int) -> int:
        """Insert a new edge ``uv`` and return its fresh id."""
        self._check_mutable()
        if u == v:
            raise InputError(f"loop at vertex {u}")
        if u not in self._inc or v not in self._inc:
            raise InputError(f"edge ({u}, {v}) has an endpoint outside the graph")
        e = self._next_edge
        self._next_edge += 1
        self._ends[e] = (u, v)
        self._live[e] = None
        self._inc[u].append(e)
        self._inc[v].append(e)
        self.ops += 1
        return e

    def remove_edge(self, e: int) -> None:
        """Mark ``e`` dead.  Its id is never reissued."""
        self._check_mutable()
        if e not in self._live:
            raise DeadEdge(e)
        u, v = self._ends[e]
        del self._live[e]
        self._inc[u].remove(e)
        self._inc[v].remove(e)
        self.ops += 1

    def freeze(self) -> "CubicGraph":
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def _check_mutable(self) -> None:
        if self._frozen:
            raise RuntimeError("graph snapshot is frozen")

    # queries --------------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self._inc)

    @property
    def num_edges(self) -> int:
        return len(self._live)

    @property
    def next_edge_id(self) -> int:
        return self._next_edge

    def vertices(self) -> list[int]:
        return sorted(self._inc)

    def edges(self) -> list[int]:
        """Live edge ids in ascending order."""
        return sorted(self._live)

    def has_vertex(self, v: int) -> bool:
        return v in self._inc

    def is_live(self, e: int) -> bool:
        return e in self._live

    def ends(self, e: int) -> tuple[int, int]:
        """Endpoints of ``e``; also answers for dead edges."""
        try:
            return self._ends[e]
        except KeyError:
            raise DeadEdge(e) from None

    def other(self, e: int, v: int) -> int:
        a, b = self._ends[e]
        return b if a == v else a

    def incident(self, v: int) -> list[int]:
        return self._inc[v]

    def degree(self, v: int) -> int:
        return len(self._inc[v])

    def require_live(self, *edges: int) -> None:
        for e in edges:
            if e not in self._live:
                raise DeadEdge(e)

    def __contains__(self, v: int) -> bool:
        return v in self._inc

    def __repr__(self) -> str:
        return f"CubicGraph(n={self.num_vertices}, m={self.num_edges})"

    # copies ---------------------------------------------------------------

    def copy(self) -> "CubicGraph":
        """A mutable deep copy sharing no state (the dead-edge arena is kept)."""
        g = CubicGraph()
        g._ends = dict(self._ends)
        g._live = dict(self._live)
        g._inc = {v: list(es) for v, es in self._inc.items()}
        g._next_edge = self._next_edge
        return g

    def subgraph(self, vertices: Iterable[int]) -> "CubicGraph":
        """Induced subgraph on ``vertices`` keeping every id unchanged."""
        g = CubicGraph()
        keep = set(vertices)
        for v in keep:
            g._inc[v] = []
        for v in keep:
            for e in self._inc[v]:
                a, b = self._ends[e]
                if a == v and b in keep:
                    g._ends[e] = (a, b)
                    g._inc[a].append(e)
                    g._inc[b].append(e)
        for v in keep:
            g._inc[v].sort()
        g._live = dict.fromkeys(sorted(g._ends))
        g._next_edge = self._next_edge
        return g

    def detach(self, vertices: Sequence[int]) -> "CubicGraph":
        """Move ``vertices`` (a union of components) out into a new graph.

        Costs time proportional to the detached part only.
        """
        self._check_mutable()
        inside = set(vertices)
        for v in vertices:
            for e in self._inc[v]:
                if self.other(e, v) not in inside:
                    raise ComponentCountMismatch(1)
        g = CubicGraph()
        for v in vertices:
            g._inc[v] = self._inc.pop(v)
            self.ops += 1
        for v in vertices:
            for e in g._inc[v]:
                if e not in g._ends:
                    g._ends[e] = self._ends[e]
                    del self._live[e]
                    self.ops += 1
        g._live = dict.fromkeys(sorted(g._ends))
        g._next_edge = self._next_edge
        return g


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> CubicGraph:
    """Build a graph on vertices ``0..n-1``; edge ``i`` of the list gets id ``i``."""
    if n <= 0:
        raise InputError("graph must have at least one vertex")
    g = CubicGraph()
    for v in range(n):
        g.add_vertex(v)
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge {i} = ({u}, {v}) has an endpoint out of range 0..{n - 1}")
        if u == v:
            raise InputError(f"edge {i} = ({u}, {v}) is a loop")
        g.add_edge(u, v)
    g.ops = 0
    return g


def require_cubic(g: CubicGraph) -> None:
    for v in g.vertices():
        d = g.degree(v)
        if d != 3:
            raise NotCubic(v, d)


def connected_components(g: CubicGraph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Vertex sets of the components of ``g`` minus the edges ``removed``.

    Components are listed by their smallest vertex; each is sorted.
    """
    skip = set(removed)
    seen: set[int] = set()
    comps: list[list[int]] = []
    for s in g.vertices():
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in g.incident(v):
                if e in skip:
                    continue
                w = g.other(e, v)
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(g: CubicGraph) -> bool:
    return len(connected_components(g)) <= 1


def split_on_edge_pair(
    g: CubicGraph, e1: int, e2: int, e1p: int, e2p: int
) -> tuple[CubicGraph, CubicGraph]:
    """Split the live graph after an ``{e1, e2}``-reduction into its two pieces.

    Returns frozen snapshots ``(piece holding e1p, piece holding e2p)``.
    Raises :class:`ComponentCountMismatch` unless there are exactly two
    components, which means ``{e1, e2}`` was not a 2-edge-cut.
    """
    comps = connected_components(g)
    if len(comps) != 2:
        raise ComponentCountMismatch(len(comps))
    side = set(comps[0])
    first, second = (comps[0], comps[1]) if g.ends(e1p)[0] in side else (comps[1], comps[0])
    p1 = g.subgraph(first).freeze()
    p2 = g.subgraph(second).freeze()
    if not (p1.is_live(e1p) and p2.is_live(e2p)):
        raise ComponentCountMismatch(2)
    return p1, p2


def matching_is_perfect(g: CubicGraph, m: Iterable[int]) -> bool:
    """True iff ``m`` is a set of live edges covering every vertex exactly once."""
    covered: set[int] = set()
    for e in m:
        if not g.is_live(e):
            return False
        u, v = g.ends(e)
        if u in covered or v in covered:
            return False
        covered.add(u)
        covered.add(v)
    return len(covered) == g.num_vertices


def iter_edge_pairs(g: CubicGraph) -> Iterator[tuple[int, int]]:
    es = g.edges()
    for i, a in enumerate(es):
        for b in es[i + 1:]:
            yield a, b
