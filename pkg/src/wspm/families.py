"""Named graph families and a random bridgeless cubic generator.

Canonical labellings (every test refers to these):

* ``theta``: two vertices joined by three parallel edges.
* ``k4``: the six pairs of ``{0,1,2,3}`` in lexicographic order.
* ``block``: K4 minus the edge ``(0,1)``; vertices 0 and 1 have degree 2.
  Not cubic -- it is the gadget the other families are built from.
* ``h8``: block A on ``0..3`` (ids 0-4), block B on ``4..7`` (ids 5-9),
  joined by ``e1 = (0,4)`` (id 10) and ``e2 = (1,5)`` (id 11).
* ``necklace(k)``: k blocks in a ring; block i occupies ``4i..4i+3`` and
  edge ``5k+i`` joins vertex 1 of block i to vertex 0 of block i+1 mod k.
* ``petersen``: outer cycle ``i~i+1``, spokes ``i~i+5``, inner pentagram
  ``5+i ~ 5+(i+2)%5``.
"""

from __future__ import annotations

import random
from itertools import combinations

from .cuts import bridges
from .errors import BadParams
from .graph import CubicGraph, build_graph, is_connected

BLOCK_EDGES = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

FAMILIES = ("theta", "k4", "k33", "petersen", "h8", "block", "necklace", "random", "spliced")


def theta() -> CubicGraph:
    return build_graph(2, [(0, 1)] * 3)


def k4() -> CubicGraph:
    return build_graph(4, list(combinations(range(4), 2)))


def k33() -> CubicGraph:
    return build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def petersen() -> CubicGraph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, edges)


def block() -> CubicGraph:
    return build_graph(4, BLOCK_EDGES)


def _blocks(k: int) -> list[tuple[int, int]]:
    return [(4 * i + a, 4 * i + b) for i in range(k) for a, b in BLOCK_EDGES]


def h8() -> CubicGraph:
    return build_graph(8, _blocks(2) + [(0, 4), (1, 5)])


def necklace(k: int) -> CubicGraph:
    if k < 2:
        raise BadParams(f"necklace needs k >= 2, got {k}")
    ring = [(4 * i + 1, 4 * ((i + 1) % k)) for i in range(k)]
    return build_graph(4 * k, _blocks(k) + ring)


def random_cubic(n: int, seed: int = 0, max_tries: int = 100_000) -> CubicGraph:
    """Random connected bridgeless cubic multigraph from the pairing model.

    Pairings with loops, bridges or more than one component are rejected and
    redrawn from the same stream, so a fixed seed gives a fixed graph.  The
    result is not uniformly distributed over cubic multigraphs.
    """
    if n < 2 or n % 2:
        raise BadParams(f"random cubic graph needs an even n >= 2, got {n}")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(points)
        pairs = [(points[i], points[i + 1]) for i in range(0, len(points), 2)]
        if any(a == b for a, b in pairs):
            continue
        g = build_graph(n, [(min(a, b), max(a, b)) for a, b in sorted(pairs)])
        if is_connected(g) and not bridges(g):
            return g
    raise BadParams(f"no bridgeless cubic pairing found for n={n} in {max_tries} tries")


def spliced(n: int, seed: int = 0) -> CubicGraph:
    """Random bridgeless cubic graph rich in 2-edge-cuts.

    Starts from a small random cubic graph and repeatedly replaces a random
    edge ``uv`` by a path ``u - a ... b - v`` through a gadget (a Theta or a
    random cubic graph on 4 or 6 vertices with the edge ``ab`` deleted), so
    every splice adds a 2-edge-cut and cactus cycles nest and grow.
    """
    if n < 2 or n % 2:
        raise BadParams(f"spliced graph needs an even n >= 2, got {n}")
    rng = random.Random(seed)
    base = 2 if n < 4 else rng.choice((2, 4))
    edges = _pairs(theta() if base == 2 else random_cubic(4, rng.randrange(1 << 30)))
    nv = base
    while nv < n:
        size = rng.choice([s for s in (2, 4, 6) if nv + s <= n])
        gadget = _pairs(theta() if size == 2 else random_cubic(size, rng.randrange(1 << 30)))
        a, b = gadget.pop(rng.randrange(len(gadget)))
        u, v = edges.pop(rng.randrange(len(edges)))
        edges += [(x + nv, y + nv) for x, y in gadget]
        edges += [(u, a + nv), (b + nv, v)]
        nv += size
    return build_graph(nv, sorted((min(x, y), max(x, y)) for x, y in edges))


def _pairs(g: CubicGraph) -> list[tuple[int, int]]:
    return [g.ends(e) for e in g.edges()]


def gen(family: str, *params: int, seed: int = 0) -> CubicGraph:
    """Dispatch by family name; ``necklace`` takes k, ``random`` and ``spliced`` take n."""
    simple = {"theta": theta, "k4": k4, "k33": k33, "petersen": petersen, "h8": h8, "block": block}
    if family in simple:
        if params:
            raise BadParams(f"{family} takes no parameters")
        return simple[family]()
    if family == "necklace":
        if len(params) != 1:
            raise BadParams("necklace takes exactly one parameter k")
        return necklace(params[0])
    if family == "random":
        if len(params) != 1:
            raise BadParams("random takes exactly one parameter n")
        n = params[0]
        if n < 4:
            raise BadParams(f"random needs n >= 4, got {n}")
        return random_cubic(n, seed)
    if family == "spliced":
        if len(params) != 1:
            raise BadParams("spliced takes exactly one parameter n")
        return spliced(params[0], seed)
    raise BadParams(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
