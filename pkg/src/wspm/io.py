"""Edge-list and matching file formats.

Edge list: a header line ``n m`` followed by ``m`` lines ``u v`` (0-based).
Edge line ``i`` defines edge id ``i``; parallel edges are repeated lines.
Matching: one edge id per line.  Writing what was read reproduces the file
byte for byte when it is in canonical form (single spaces, ``\\n`` endings).
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import InputError, ParseError
from .graph import CubicGraph, build_graph


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(lineno, f"expected {count} integers, got {line.strip()!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(lineno, f"not an integer in {line.strip()!r}") from None


def loads(text: str) -> CubicGraph:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError(1, "empty input")
    n, m = _ints(lines[0], 1, 2)
    if n <= 0 or m < 0:
        raise ParseError(1, f"bad header n={n} m={m}")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(len(lines), f"header announces {m} edges, found {len(body)}")
    edges = []
    for i, line in enumerate(body):
        u, v = _ints(line, i + 2, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(i + 2, f"endpoint out of range 0..{n - 1}")
        if u == v:
            raise ParseError(i + 2, f"loop at vertex {u}")
        edges.append((u, v))
    return build_graph(n, edges)


def dumps(g: CubicGraph) -> str:
    es = g.edges()
    vs = g.vertices()
    if es != list(range(len(es))) or vs != list(range(len(vs))):
        raise InputError("only graphs with ids 0..n-1 and 0..m-1 can be written; relabel first")
    out = [f"{len(vs)} {len(es)}"]
    out.extend(f"{u} {v}" for u, v in map(g.ends, es))
    return "\n".join(out) + "\n"


def load(path: str | Path) -> CubicGraph:
    return loads(Path(path).read_text())


def store(g: CubicGraph, path: str | Path) -> None:
    Path(path).write_text(dumps(g))


def loads_matching(text: str, g: CubicGraph | None = None) -> set[int]:
    m: set[int] = set()
    for i, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        (e,) = _ints(line, i, 1)
        if g is not None and not g.is_live(e):
            raise ParseError(i, f"edge {e} is not an edge of the graph")
        if e in m:
            raise ParseError(i, f"edge {e} listed twice")
        m.add(e)
    return m


def dumps_matching(m: Iterable[int]) -> str:
    return "".join(f"{e}\n" for e in sorted(m))


def load_matching(path: str | Path, g: CubicGraph | None = None) -> set[int]:
    return loads_matching(Path(path).read_text(), g)


def store_matching(m: Iterable[int], path: str | Path) -> None:
    Path(path).write_text(dumps_matching(m))


def loads_graph6(text: str) -> CubicGraph:
    """Read one graph in graph6 format (simple graphs only, so no parallels)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= d < 64 for d in data):
        raise ParseError(1, "not a graph6 string")
    if data[0] != 63:
        n, bits = data[0], data[1:]
    elif len(data) > 4 and data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        bits = data[4:]
    else:
        raise ParseError(1, "graph6 graphs above 258047 vertices are not supported")
    flat = [(d >> (5 - k)) & 1 for d in bits for k in range(6)]
    need = n * (n - 1) // 2
    if len(flat) < need:
        raise ParseError(1, "graph6 string too short")
    edges = []
    pos = 0
    for v in range(1, n):
        for u in range(v):
            if flat[pos]:
                edges.append((u, v))
            pos += 1
    return build_graph(n, sorted(edges))
