"""Gluing piece matchings and the backward phase.

Matchings are plain sets of global edge ids.  Since a reduction never
reuses an id, gluing is set surgery on at most four edges.
"""

from __future__ import annotations

import enum
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cactus import build_cactus
from .cuts import DEFAULT_CAP, bridges
from .errors import AgreementViolated, Disconnected, HasBridge, WSPMError
from .graph import CubicGraph, Matching, connected_components, require_cubic
from .reduction import ReductionPlan, ReductionRecord, forward_phase
from .solver import ExactBackend, wspm_any, wspm_with_edge, wspm_without_edge

log = logging.getLogger(__name__)


class GlueCase(enum.Enum):
    BOTH_AVOID = "both-avoid"
    BOTH_CONTAIN = "both-contain"


@dataclass(frozen=True)
class GlueStep:
    record: ReductionRecord
    continuing: frozenset[int]
    separated: frozenset[int]
    result: frozenset[int]
    case: GlueCase


class VerificationFailed(WSPMError, AssertionError):
    pass


def glue_case(m1: Matching, m2: Matching, r: ReductionRecord) -> GlueCase:
    has1, has2 = r.e1p in m1, r.e2p in m2
    if has1 != has2:
        raise AgreementViolated(
            f"record {r.index}: e1'={r.e1p} {'in' if has1 else 'not in'} M1 but "
            f"e2'={r.e2p} {'in' if has2 else 'not in'} M2")
    return GlueCase.BOTH_CONTAIN if has1 else GlueCase.BOTH_AVOID


def glue(m1: Matching, m2: Matching, r: ReductionRecord) -> Matching:
    """Combine agreeing matchings of the two sides of reduction ``r``.

    ``m1`` belongs to the side holding ``e1p`` and ``m2`` to the side holding
    ``e2p``.  Both avoid: the union.  Both contain: swap the two new edges
    back for the removed ``e1`` and ``e2``.
    """
    out = set(m1)
    _glue_into(out, m2, r, glue_case(m1, m2, r))
    return out


def _glue_into(m: Matching, m2: Matching, r: ReductionRecord, case: GlueCase) -> None:
    m |= m2
    if case is GlueCase.BOTH_CONTAIN:
        m.discard(r.e1p)
        m.discard(r.e2p)
        m.add(r.e1)
        m.add(r.e2)


def _piece_matching(plan: ReductionPlan, r: ReductionRecord, contain: bool, backend) -> Matching:
    piece = plan.pieces[r.separated]
    if contain:
        return wspm_with_edge(piece, r.e2p, backend)
    return wspm_without_edge(piece, r.e2p, backend)


def backward_phase(
    plan: ReductionPlan,
    seed: Matching,
    backend: ExactBackend | None = None,
    trace: list[GlueStep] | None = None,
    speculative: bool = False,
) -> Matching:
    """Replay the records in reverse, gluing a matching of each separated piece.

    ``seed`` must be a well-spread perfect matching of the final piece.  With
    ``speculative`` both prescribed variants of every piece are solved up
    front on a thread pool and the unneeded one is discarded.
    """
    cache: dict[tuple[int, bool], Matching] = {}
    if speculative and plan.records:
        jobs = [(r, flag) for r in plan.records for flag in (True, False)]
        with ThreadPoolExecutor() as pool:
            results = pool.map(lambda job: _piece_matching(plan, job[0], job[1], ExactBackend()), jobs)
            for (r, flag), res in zip(jobs, results):
                cache[r.index, flag] = res
    m = set(seed)
    for r in reversed(plan.records):
        contain = r.e1p in m
        mi = cache.get((r.index, contain))
        if mi is None:
            mi = _piece_matching(plan, r, contain, backend)
        before = frozenset(m) if trace is not None else None
        case = glue_case(m, mi, r)
        _glue_into(m, mi, r, case)
        if trace is not None:
            trace.append(GlueStep(r, before, frozenset(mi), frozenset(m), case))  # type: ignore[arg-type]
    return m


def wspm(
    g: CubicGraph,
    backend: ExactBackend | None = None,
    verify: bool = False,
    cap: int = DEFAULT_CAP,
    cactus_method: str = "auto",
    allow_disconnected: bool = False,
    trace: list[GlueStep] | None = None,
) -> Matching:
    """A well-spread perfect matching of a bridgeless cubic graph.

    A 3-edge-connected input goes straight to the piece solver; otherwise
    the graph is reduced along its cactus and the piece matchings are glued
    back.  ``verify`` re-checks the result by brute-force cut enumeration
    (skipped with a warning above ``cap`` edges).  Disconnected inputs are
    refused unless ``allow_disconnected``, in which case every component is
    solved on its own.
    """
    require_cubic(g)
    comps = connected_components(g)
    if len(comps) > 1:
        if not allow_disconnected:
            raise Disconnected(f"input has {len(comps)} components")
        m: Matching = set()
        for comp in comps:
            m |= wspm(g.subgraph(comp), backend, verify, cap, cactus_method, trace=trace)
        return m
    bad = bridges(g)
    if bad:
        raise HasBridge(min(bad))
    backend = backend or ExactBackend(cap=cap)
    t, phi = build_cactus(g, method=cactus_method, cap=cap)
    if t.num_edges == 0:
        m = wspm_any(g, backend)
    else:
        plan = forward_phase(g, t, phi)
        seed = wspm_any(plan.final_piece, backend)
        m = backward_phase(plan, seed, backend, trace)
    if verify:
        from .verify import verify_wspm

        report = verify_wspm(g, m, cap=cap)
        if report.skipped:
            log.warning("verification skipped: %d edges exceed the cap %d", g.num_edges, cap)
        elif not report.valid:
            raise VerificationFailed(report.describe())
    return m
