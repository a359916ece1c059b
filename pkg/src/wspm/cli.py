"""Command-line front end.

    wspm solve GRAPH [-o OUT] [--verify] [--backend exact] [--budget N] [--cap N]
    wspm verify GRAPH MATCHING [--cap N]
    wspm gen FAMILY [PARAM] [--seed S] [-o OUT]
    wspm trace GRAPH [--dot DIR]
    wspm cuts {bridges,two,three,classes,components} GRAPH [--cap N]
    wspm cactus dump GRAPH [-o OUT]
    wspm bench [--kmin K] [--kmax K] [--repeats R] [--solve]

Set WSPM_LOG (DEBUG, INFO, ...) for log output on stderr.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import cuts, io
from .assembly import wspm
from .bench import BenchRecord, bench
from .cactus import build_cactus, to_dot
from .cuts import DEFAULT_CAP
from .errors import BadParams, Disconnected, HasBridge, InputError, NotCubic, WSPMError
from .families import FAMILIES, gen
from .graph import require_cubic
from .reduction import forward_phase
from .solver import get_backend
from .verify import verify_wspm

EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    g = io.load(args.graph)
    backend = get_backend(args.backend, budget=args.budget, cap=args.cap)
    m = wspm(g, backend=backend, verify=args.verify, cap=args.cap)
    _emit(io.dumps_matching(m), args.output)
    return 0


def cmd_verify(args) -> int:
    g = io.load(args.graph)
    m = io.load_matching(args.matching)
    report = verify_wspm(g, m, cap=args.cap)
    print(report.describe())
    return 0 if report.valid else 1


def cmd_gen(args) -> int:
    g = gen(args.family, *args.params, seed=args.seed)
    _emit(io.dumps(g), args.output)
    return 0


def cmd_trace(args) -> int:
    g = io.load(args.graph)
    require_cubic(g)
    t, phi = build_cactus(g, cap=args.cap)
    dot_dir = Path(args.dot) if args.dot else None
    if dot_dir:
        dot_dir.mkdir(parents=True, exist_ok=True)
        (dot_dir / "step000.dot").write_text(to_dot(t, "step0"))

    def show(step) -> None:
        r = step.record
        print(f"{r.index}: removed ({r.e1},{r.e2}) added ({r.e1p},{r.e2p}) "
              f"piece_sizes ({r.sizes[0]},{r.sizes[1]})")
        if dot_dir:
            (dot_dir / f"step{r.index:03d}.dot").write_text(to_dot(step.cactus, f"step{r.index}"))

    plan = forward_phase(g, t, phi, on_step=show)
    print(f"k={plan.k} pieces={' '.join(map(str, plan.piece_sizes()))} ops={plan.ops}")
    return 0


def cmd_cuts(args) -> int:
    g = io.load(args.graph)
    if args.kind == "bridges":
        rows = [(e,) for e in sorted(cuts.bridges(g))]
    elif args.kind == "two":
        rows = cuts.enumerate_2_edge_cuts(g)
    elif args.kind == "three":
        rows = cuts.enumerate_3_edge_cuts(g, cap=args.cap)
    elif args.kind == "classes":
        rows = [tuple(c) for c in cuts.edge_equivalence_classes(g)]
    else:
        rows = [tuple(c) for c in cuts.three_edge_connected_components(g)]
    for row in rows:
        print(" ".join(map(str, row)))
    return 0


def cmd_cactus(args) -> int:
    g = io.load(args.graph)
    t, _ = build_cactus(g, cap=args.cap)
    _emit(to_dot(t), args.output)
    return 0


def cmd_bench(args) -> int:
    print(BenchRecord.CSV_HEADER)
    for rec in bench(args.kmin, args.kmax, args.repeats, args.solve):
        print(rec.csv(), flush=True)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wspm", description="Well-spread perfect matchings in bridgeless cubic graphs")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute a well-spread perfect matching")
    s.add_argument("graph")
    s.add_argument("-o", "--output")
    s.add_argument("--verify", action="store_true", help="re-check the result by cut enumeration")
    s.add_argument("--backend", default="exact")
    s.add_argument("--budget", type=int, default=None, help="node-expansion cap per piece")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP, help="edge cap for 3-cut enumeration")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a matching file against a graph")
    s.add_argument("graph")
    s.add_argument("matching")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="write a named or random graph")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("trace", help="print the reduction records")
    s.add_argument("graph")
    s.add_argument("--dot", metavar="DIR", help="also write a DOT cactus snapshot per step")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("cuts", help="enumerate cuts and components")
    s.add_argument("kind", choices=["bridges", "two", "three", "classes", "components"])
    s.add_argument("graph")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_cuts)

    s = sub.add_parser("cactus", help="cactus representation tools")
    csub = s.add_subparsers(dest="action", required=True)
    d = csub.add_parser("dump", help="write the cactus as DOT")
    d.add_argument("graph")
    d.add_argument("-o", "--output")
    d.add_argument("--cap", type=int, default=DEFAULT_CAP)
    d.set_defaults(func=cmd_cactus)

    s = sub.add_parser("bench", help="forward-phase scaling on necklaces (CSV)")
    s.add_argument("--kmin", type=int, default=128)
    s.add_argument("--kmax", type=int, default=4096)
    s.add_argument("--repeats", type=int, default=3)
    s.add_argument("--solve", action="store_true", help="also time the backward phase")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("WSPM_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HasBridge, NotCubic, Disconnected, InputError, BadParams, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (WSPMError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
