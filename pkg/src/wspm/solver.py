"""Well-spread perfect matchings of 3-edge-connected cubic pieces.

The default backend is an exact backtracking search: repeatedly take the
lowest uncovered vertex and branch on its free incident edges in id order.
Each precomputed cut carries a counter of matched edges and of edges still
open; a branch dies as soon as some cut can no longer end with an allowed
count (exactly one for a 3-edge-cut, zero or two for a 2-edge-cut) or an
uncovered vertex runs out of free edges.

A well-spread perfect matching through any prescribed edge of a
3-edge-connected cubic graph always exists, so running out of branches on
such an input is reported as :class:`NoWSPM` (a bug), while hitting the
node budget is :class:`BudgetExceeded`.
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from typing import Literal, Protocol

from .cactus import build_cactus
from .cuts import DEFAULT_CAP, enumerate_2_edge_cuts, enumerate_3_edge_cuts
from .errors import BudgetExceeded, InputError, NoWSPM, TooLarge
from .graph import CubicGraph, Matching, is_connected, require_cubic

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Constraint:
    kind: Literal["any", "contain", "avoid"] = "any"
    edge: int | None = None


ANY = Constraint()


@dataclass(frozen=True)
class SolverRequest:
    piece: CubicGraph
    constraint: Constraint = ANY


class SolverBackend(Protocol):
    name: str
    certifies: bool

    def solve(self, request: SolverRequest) -> Matching: ...


def check_piece(g: CubicGraph) -> None:
    """Require a connected, 3-edge-connected cubic graph with an even order."""
    require_cubic(g)
    if g.num_vertices % 2:
        raise InputError(f"piece has an odd number of vertices ({g.num_vertices})")
    if not is_connected(g):
        raise InputError("piece is disconnected")
    t, _ = build_cactus(g, method="labels")
    if t.num_edges:
        raise InputError("piece is not 3-edge-connected")


class ExactBackend:
    """Backtracking over perfect matchings with per-cut counters."""

    name = "exact"

    def __init__(self, budget: int | None = None, cap: int = DEFAULT_CAP, check: bool = True):
        self.budget = budget
        self.cap = cap
        self.check = check
        self.expansions = 0

    @property
    def certifies(self) -> bool:
        return True

    def cut_constraints(self, g: CubicGraph) -> list[tuple[tuple[int, ...], frozenset[int]]]:
        try:
            triples = enumerate_3_edge_cuts(g, self.cap)
        except TooLarge:
            log.warning("piece with %d edges is above the 3-cut cap %d; "
                        "output is a perfect matching not certified well-spread",
                        g.num_edges, self.cap)
            return []
        cons = [(t, frozenset({1})) for t in triples]
        cons += [(p, frozenset({0, 2})) for p in enumerate_2_edge_cuts(g)]
        return cons

    def solve(self, request: SolverRequest) -> Matching:
        g, c = request.piece, request.constraint
        if self.check:
            check_piece(g)
        if c.kind != "any":
            g.require_live(c.edge)  # type: ignore[arg-type]
        forced = c.edge if c.kind == "contain" else None
        forbidden = {c.edge} if c.kind == "avoid" else set()
        result = _search(g, self.cut_constraints(g), forced, forbidden, self)
        if result is None:
            raise NoWSPM(f"no well-spread perfect matching with constraint {c}")
        return result


BACKENDS = {"exact": ExactBackend}


def get_backend(name: str = "exact", **options) -> ExactBackend:
    try:
        return BACKENDS[name](**options)
    except KeyError:
        raise InputError(f"unknown solver backend {name!r}; available: {', '.join(BACKENDS)}") from None


def _search(g, constraints, forced, forbidden, backend: ExactBackend) -> Matching | None:
    cuts_of: dict[int, list[int]] = {e: [] for e in g.edges()}
    for ci, (edges, _) in enumerate(constraints):
        for e in edges:
            cuts_of[e].append(ci)
    allowed = [a for _, a in constraints]
    top = [max(a) for a in allowed]
    matched = [0] * len(constraints)
    open_ = [len(edges) for edges, _ in constraints]
    unavailable: set[int] = set()
    covered: set[int] = set()
    chosen: list[int] = []
    order = g.vertices()

    def take(e: int, trail: list) -> bool:
        """Add ``e``; log every counter change on ``trail``.  False on conflict."""
        ok = True
        u, v = g.ends(e)
        covered.add(u)
        covered.add(v)
        chosen.append(e)
        for ci in cuts_of[e]:
            matched[ci] += 1
            open_[ci] -= 1
            trail.append(ci)
            if matched[ci] > top[ci]:
                ok = False
        for w in (u, v):
            for f in g.incident(w):
                if f == e or f in unavailable:
                    continue
                unavailable.add(f)
                trail.append(("u", f))
                for ci in cuts_of[f]:
                    open_[ci] -= 1
                    trail.append(("o", ci))
                    if open_[ci] == 0 and matched[ci] not in allowed[ci]:
                        ok = False
        if ok:
            for ci in cuts_of[e]:
                if open_[ci] == 0 and matched[ci] not in allowed[ci]:
                    ok = False
        if ok:
            # a neighbour left with no free edge can never be covered
            for w in (u, v):
                for f in g.incident(w):
                    x = g.other(f, w)
                    if x not in covered and not any(h not in unavailable for h in g.incident(x)):
                        ok = False
        return ok

    def undo(e: int, trail: list) -> None:
        for item in reversed(trail):
            if isinstance(item, tuple):
                tag, val = item
                if tag == "u":
                    unavailable.discard(val)
                else:
                    open_[val] += 1
            else:
                matched[item] -= 1
                open_[item] += 1
        u, v = g.ends(e)
        covered.discard(u)
        covered.discard(v)
        chosen.pop()

    for e in forbidden:
        unavailable.add(e)
        for ci in cuts_of[e]:
            open_[ci] -= 1
    if forced is not None:
        unavailable.add(forced)
        if not take(forced, []):
            return None

    limit = sys.getrecursionlimit()
    if g.num_vertices + 100 > limit:
        sys.setrecursionlimit(g.num_vertices + 100)

    def rec(pos: int) -> bool:
        while pos < len(order) and order[pos] in covered:
            pos += 1
        if pos == len(order):
            return all(matched[ci] in allowed[ci] for ci in range(len(allowed)))
        v = order[pos]
        for e in sorted(g.incident(v)):
            if e in unavailable:
                continue
            backend.expansions += 1
            if backend.budget is not None and backend.expansions > backend.budget:
                raise BudgetExceeded(backend.budget)
            trail: list = []
            unavailable.add(e)
            if take(e, trail) and rec(pos + 1):
                return True
            undo(e, trail)
            unavailable.discard(e)
        return False

    if rec(0):
        return set(chosen)
    return None


def solve(g: CubicGraph, constraint: Constraint = ANY, backend: ExactBackend | None = None) -> Matching:
    backend = backend or ExactBackend()
    return backend.solve(SolverRequest(g, constraint))


def wspm_any(g: CubicGraph, backend: ExactBackend | None = None) -> Matching:
    return solve(g, ANY, backend)


def wspm_with_edge(g: CubicGraph, e: int, backend: ExactBackend | None = None) -> Matching:
    m = solve(g, Constraint("contain", e), backend)
    assert e in m
    return m


def wspm_without_edge(g: CubicGraph, e: int, backend: ExactBackend | None = None) -> Matching:
    """A matching avoiding ``e``: force a different edge at one end of ``e``.

    Any edge sharing an endpoint with ``e`` covers that endpoint, which keeps
    ``e`` out of the matching.
    """
    g.require_live(e)
    u, _ = g.ends(e)
    neighbour = min(f for f in g.incident(u) if f != e)
    m = wspm_with_edge(g, neighbour, backend)
    assert e not in m
    return m
