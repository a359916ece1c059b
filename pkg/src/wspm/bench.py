"""Scaling harness for the forward phase on necklaces."""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass

from .assembly import backward_phase
from .cactus import build_cactus
from .families import necklace
from .reduction import ReductionPlan, forward_phase
from .solver import ExactBackend, wspm_any


@dataclass(frozen=True)
class BenchRecord:
    k: int
    n: int
    ops: int
    pieces: int
    build_seconds: float
    forward_seconds: float
    backward_seconds: float | None = None

    @property
    def ops_per_vertex(self) -> float:
        return self.ops / self.n

    CSV_HEADER = "k,n,ops,ops_per_vertex,pieces,build_s,forward_s,backward_s"

    def csv(self) -> str:
        back = "" if self.backward_seconds is None else f"{self.backward_seconds:.6f}"
        return (f"{self.k},{self.n},{self.ops},{self.ops_per_vertex:.4f},{self.pieces},"
                f"{self.build_seconds:.6f},{self.forward_seconds:.6f},{back}")


def _timed_forward(g, t, phi) -> tuple[ReductionPlan, float]:
    gc.collect()
    gc.disable()
    try:
        start = time.perf_counter()
        plan = forward_phase(g, t, phi)
        return plan, time.perf_counter() - start
    finally:
        gc.enable()


def _prepare(k: int):
    g = necklace(k)
    start = time.perf_counter()
    t, phi = build_cactus(g)
    return g, t, phi, time.perf_counter() - start


def time_forward(k: int, repeats: int = 3) -> tuple[ReductionPlan, float, float]:
    """Build necklace(k) and its cactus, then time the forward phase.

    Returns the plan, the cactus build time and the best forward time of
    ``repeats`` runs (garbage collection paused while timing).
    """
    g, t, phi, build = _prepare(k)
    plan, best = _timed_forward(g, t, phi)
    for _ in range(repeats - 1):
        best = min(best, _timed_forward(g, t, phi)[1])
    return plan, build, best


def bench_samples(
    kmin: int, kmax: int, repeats: int = 3, min_seconds: float = 0.0, copies: int = 1
) -> tuple[dict[int, ReductionPlan], dict[int, float], dict[int, list[float]]]:
    """Time the forward phase on necklace(k), k = kmin, 2*kmin, ... <= kmax.

    Sizes are timed round-robin, one run of every size per round, so that
    neighbouring sizes are measured moments apart under the same machine
    load.  Rounds continue past ``repeats`` until ``min_seconds`` of
    forward-phase time has accumulated.  With ``copies > 1`` every size is
    built that many times and the copies take turns, since one particular
    in-memory instance can run slow for a whole process.

    Returns the plans, the cactus build times and the per-round timings.
    """
    if kmin < 2:
        raise ValueError("bench needs kmin >= 2")
    ks = []
    k = kmin
    while k <= kmax:
        ks.append(k)
        k *= 2
    prepared = {k: [_prepare(k) for _ in range(max(1, copies))] for k in ks}
    plans: dict[int, ReductionPlan] = {}
    samples: dict[int, list[float]] = {k: [] for k in ks}
    rounds = 0
    spent = 0.0
    while ks and (rounds < max(1, repeats) or spent < min_seconds):
        for k in ks:
            g, t, phi, _ = prepared[k][rounds % len(prepared[k])]
            plans[k], elapsed = _timed_forward(g, t, phi)
            samples[k].append(elapsed)
            spent += elapsed
        rounds += 1
    build = {k: min(p[3] for p in prepared[k]) for k in ks}
    return plans, build, samples


def doubling_ratios(samples: dict[int, list[float]]) -> dict[int, float]:
    """Median over rounds of ``time(2k) / time(k)``, keyed by the larger k.

    Both timings of a pair come from the same round, which cancels slow
    drifts in machine speed that a ratio of separate minima would not.
    """
    ks = sorted(samples)
    return {
        b: statistics.median(tb / ta for ta, tb in zip(samples[a], samples[b]))
        for a, b in zip(ks, ks[1:])
    }


def bench(
    kmin: int, kmax: int, repeats: int = 3, solve: bool = False, min_seconds: float = 0.0,
    copies: int = 1,
) -> list[BenchRecord]:
    """One record per necklace size; ``forward_seconds`` is the best round."""
    plans, build, samples = bench_samples(kmin, kmax, repeats, min_seconds, copies)
    out = []
    for k, plan in sorted(plans.items()):
        backward = None
        if solve:
            backend = ExactBackend()
            start = time.perf_counter()
            backward_phase(plan, wspm_any(plan.final_piece, backend), backend)
            backward = time.perf_counter() - start
        out.append(BenchRecord(k, plan.n, plan.ops, len(plan.pieces), build[k], min(samples[k]), backward))
    return out
