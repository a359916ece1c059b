"""Independent check that a matching is a well-spread perfect matching.

Built only on the brute-force enumerators in :mod:`wspm.cuts` and the raw
graph storage; nothing here touches the cactus, the reductions or the
solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .cuts import DEFAULT_CAP, CutPair, CutTriple, enumerate_2_edge_cuts, enumerate_3_edge_cuts
from .errors import TooLarge
from .graph import CubicGraph

COUNT_CAP_VERTICES = 24


@dataclass
class VerifyReport:
    perfect: bool
    violations: list[tuple[CutTriple, int]] = field(default_factory=list)
    parity_violations: list[tuple[CutPair, int]] = field(default_factory=list)
    skipped: bool = False
    problems: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.perfect and not self.violations and not self.parity_violations and not self.skipped

    def describe(self) -> str:
        lines = []
        if self.skipped:
            lines.append("3-cut check skipped: graph exceeds the enumeration cap")
        lines.extend(self.problems)
        for cut, k in self.violations:
            lines.append(f"3-edge-cut {cut} meets the matching in {k} edges")
        for pair, k in self.parity_violations:
            lines.append(f"2-edge-cut {pair} meets the matching in {k} edge")
        if not lines:
            lines.append("valid well-spread perfect matching")
        return "\n".join(lines)


def verify_wspm(g: CubicGraph, m: Iterable[int], cap: int = DEFAULT_CAP) -> VerifyReport:
    """Report every way in which ``m`` fails to be well-spread and perfect.

    Never raises; a graph above ``cap`` edges gets ``skipped=True``.
    """
    ms = set(m)
    problems = []
    count: dict[int, int] = {v: 0 for v in g.vertices()}
    for e in sorted(ms):
        if not g.is_live(e):
            problems.append(f"edge {e} is not a live edge of the graph")
            continue
        for v in g.ends(e):
            count[v] += 1
    for v, c in count.items():
        if c == 0:
            problems.append(f"vertex {v} is not covered")
        elif c > 1:
            problems.append(f"vertex {v} is covered {c} times")
    report = VerifyReport(perfect=not problems, problems=problems)
    try:
        triples = enumerate_3_edge_cuts(g, cap)
    except TooLarge:
        report.skipped = True
        triples = []
    for t in triples:
        k = sum(e in ms for e in t)
        if k != 1:
            report.violations.append((t, k))
    for p in enumerate_2_edge_cuts(g):
        k = sum(e in ms for e in p)
        if k == 1:
            report.parity_violations.append((p, k))
    return report


def perfect_matchings(g: CubicGraph) -> Iterator[frozenset[int]]:
    """Every perfect matching, by branching on the lowest uncovered vertex."""
    order = g.vertices()
    covered: set[int] = set()
    chosen: list[int] = []

    def rec(pos: int) -> Iterator[frozenset[int]]:
        while pos < len(order) and order[pos] in covered:
            pos += 1
        if pos == len(order):
            yield frozenset(chosen)
            return
        v = order[pos]
        for e in g.incident(v):
            w = g.other(e, v)
            if w in covered:
                continue
            covered.update((v, w))
            chosen.append(e)
            yield from rec(pos + 1)
            chosen.pop()
            covered.difference_update((v, w))

    yield from rec(0)


def all_wspms(g: CubicGraph) -> list[frozenset[int]]:
    if g.num_vertices > COUNT_CAP_VERTICES:
        raise TooLarge(g.num_vertices, COUNT_CAP_VERTICES)
    triples = enumerate_3_edge_cuts(g, cap=max(DEFAULT_CAP, g.num_edges))
    pairs = enumerate_2_edge_cuts(g)
    out = []
    for pm in perfect_matchings(g):
        if all(sum(e in pm for e in t) == 1 for t in triples) and \
                all(sum(e in pm for e in p) != 1 for p in pairs):
            out.append(pm)
    return sorted(out, key=sorted)


def count_wspms(g: CubicGraph) -> int:
    """Number of well-spread perfect matchings, by exhaustive enumeration."""
    return len(all_wspms(g))
