"""2-cut reductions and the forward (reduction) phase.

The forward phase repeatedly takes the lowest degree-2 node ``x`` of the
cactus, reduces the graph along the two external edges at ``x`` and splits
off the 3-edge-connected piece on ``phi^-1(x)``.  Every step does a bounded
amount of work besides copying out the separated piece, so the whole phase
is linear in the number of vertices.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .cactus import Cactus, Phi, pick_cut_at
from .errors import LoopWouldForm, NotCactus, NotTwoCut
from .graph import CubicGraph

log = logging.getLogger(__name__)

Orientation = tuple[int, int, int, int]


@dataclass(frozen=True)
class ReductionRecord:
    """One step ``(i, e1, e2, e1', e2')`` with the endpoint assignment.

    ``e1 = u1v1`` and ``e2 = u2v2``; the new edges are ``e1p = u1u2`` in the
    continuing graph and ``e2p = v1v2`` in the separated piece.
    """

    index: int
    e1: int
    e2: int
    e1p: int
    e2p: int
    u1: int
    v1: int
    u2: int
    v2: int
    separated: int
    sizes: tuple[int, int]


@dataclass
class ReductionPlan:
    records: list[ReductionRecord]
    pieces: list[CubicGraph]
    final: int
    ops: int = 0
    n: int = 0

    @property
    def k(self) -> int:
        return len(self.records)

    @property
    def final_piece(self) -> CubicGraph:
        return self.pieces[self.final]

    def piece_sizes(self) -> list[int]:
        return [p.num_vertices for p in self.pieces]


@dataclass
class StepView:
    """What a forward-phase observer sees after each step (read-only use)."""

    record: ReductionRecord
    graph: CubicGraph
    cactus: Cactus
    piece: CubicGraph
    piece_members: list[int] = field(default_factory=list)


def orient_cut(g: CubicGraph, e1: int, e2: int) -> Orientation:
    """Label the ends of a 2-edge-cut as ``(u1, v1, u2, v2)``.

    ``u1`` is the first stored endpoint of ``e1``; ``u2`` is the endpoint of
    ``e2`` on the same side.  One traversal of ``g - {e1, e2}`` from each
    side.
    """
    g.require_live(e1, e2)
    if e1 == e2:
        raise NotTwoCut("a 2-edge-cut needs two distinct edges")
    u1, v1 = g.ends(e1)
    side_u = _reach(g, u1, (e1, e2))
    if v1 in side_u:
        raise NotTwoCut(f"{{{e1}, {e2}}} does not separate the ends of {e1}")
    a, b = g.ends(e2)
    if (a in side_u) == (b in side_u):
        raise NotTwoCut(f"{{{e1}, {e2}}} does not separate the ends of {e2}")
    u2, v2 = (a, b) if a in side_u else (b, a)
    side_v = _reach(g, v1, (e1, e2))
    if v2 not in side_v or len(side_u) + len(side_v) != len(_reach(g, u1, ())):
        raise NotTwoCut(f"{{{e1}, {e2}}} is not an inclusion-minimal cut")
    return u1, v1, u2, v2


def _reach(g: CubicGraph, s: int, removed: tuple[int, ...]) -> set[int]:
    seen = {s}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for e in g.incident(v):
            if e in removed:
                continue
            w = g.other(e, v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def two_cut_reduce(
    g: CubicGraph, e1: int, e2: int, orientation: Orientation | None = None
) -> tuple[int, int]:
    """Replace ``e1 = u1v1, e2 = u2v2`` by fresh edges ``u1u2`` and ``v1v2``.

    Mutates ``g`` and returns the new ids ``(e1p, e2p)``.  Without an
    explicit ``orientation`` the cut is checked and oriented by traversal.
    """
    u1, v1, u2, v2 = orientation if orientation is not None else orient_cut(g, e1, e2)
    if u1 == u2 or v1 == v2:
        # a shared end would make its third edge a bridge
        raise LoopWouldForm(f"reducing {{{e1}, {e2}}} would create a loop")
    g.remove_edge(e1)
    g.remove_edge(e2)
    return g.add_edge(u1, u2), g.add_edge(v1, v2)


def forward_phase(
    g: CubicGraph,
    t: Cactus,
    phi: Phi,
    on_step: Callable[[StepView], None] | None = None,
) -> ReductionPlan:
    """Reduce ``g`` along the cactus until no 2-edge-cut is left.

    ``g`` and ``t`` are copied, not mutated.  The result lists the separated
    pieces ``G_1..G_k`` in order followed by the final piece ``H_k``; all are
    frozen snapshots that keep the global edge ids.
    """
    h = g.copy()
    h.ops = 0
    cactus = t.copy()
    records: list[ReductionRecord] = []
    pieces: list[CubicGraph] = []
    steps = 0
    i = 1
    while cactus.num_edges:
        x = cactus.next_degree2()
        if x is None:
            raise NotCactus("cactus has edges but no node of degree 2")
        _a, _b, e1, e2 = pick_cut_at(cactus, x)
        p, q = h.ends(e1)
        v1, u1 = (p, q) if phi[p] == x else (q, p)
        p, q = h.ends(e2)
        v2, u2 = (p, q) if phi[p] == x else (q, p)
        if phi[v1] != x or phi[v2] != x or phi[u1] == x or phi[u2] == x:
            raise NotCactus(f"graph edges {e1}, {e2} do not leave node {x}")
        e1p, e2p = two_cut_reduce(h, e1, e2, (u1, v1, u2, v2))
        cactus.reduce_at(x, e1p)
        members = cactus.remove_node(x)
        piece = h.detach(members).freeze()
        pieces.append(piece)
        rec = ReductionRecord(i, e1, e2, e1p, e2p, u1, v1, u2, v2,
                              len(pieces) - 1, (h.num_vertices, piece.num_vertices))
        records.append(rec)
        log.debug("step %d: removed (%d,%d) added (%d,%d) sizes %s", i, e1, e2, e1p, e2p, rec.sizes)
        if on_step is not None:
            on_step(StepView(rec, h, cactus, piece, members))
        steps += 1
        i += 1
    pieces.append(h.freeze())
    ops = h.ops + cactus.ops + steps
    return ReductionPlan(records, pieces, len(pieces) - 1, ops, g.num_vertices)
