"""Reading and writing graphs and colorings.

Edge lists are UTF-8 text, ``#`` starts a comment, and each data line is
``u v`` with 0-based vertex ids. An optional first data line ``n <count>``
declares the vertex count (needed for isolated vertices). DIMACS ``.col``
files use ``p edge n m`` and 1-based ``e u v`` lines.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphError, ParseError
from .graph import Coloring, Digraph, Graph


def _as_text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    return data


def _int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative vertex id {value}", lineno)
    return value


def _parse_pairs(text: str) -> tuple[int | None, list[tuple[int, int, int]]]:
    declared = None
    pairs = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if first and parts[0] == "n":
            if len(parts) != 2:
                raise ParseError("header must be 'n <count>'", lineno)
            declared = _int(parts[1], lineno)
            first = False
            continue
        first = False
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if declared is not None and max(u, v) >= declared:
            raise ParseError(f"vertex {max(u, v)} outside declared range 0..{declared - 1}", lineno)
        pairs.append((u, v, lineno))
    return declared, pairs


def _parse_dimacs(text: str) -> tuple[int, list[tuple[int, int, int]]]:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or n is not None:
                raise ParseError("malformed or repeated 'p edge n m' header", lineno)
            n = _int(parts[2], lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before 'p' header", lineno)
            if len(parts) != 3:
                raise ParseError(f"expected 'e u v', got {line!r}", lineno)
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            for w in (u, v):
                if not 1 <= w <= n:
                    raise ParseError(f"vertex {w} outside declared range 1..{n}", lineno)
            pairs.append((u - 1, v - 1, lineno))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge n m' header")
    return n, pairs


def parse_graph(data: bytes | str, format: str = "edge-list") -> Graph:
    """Parse an undirected graph. ``format`` is ``edge-list`` or ``dimacs``."""
    text = _as_text(data)
    if format == "dimacs":
        n, pairs = _parse_dimacs(text)
    elif format == "edge-list":
        declared, pairs = _parse_pairs(text)
        n = declared if declared is not None else 1 + max((max(u, v) for u, v, _ in pairs), default=-1)
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return Graph(n, ((u, v) for u, v, _ in pairs))


def parse_digraph(data: bytes | str) -> Digraph:
    """Parse an arc list in edge-list syntax; ``u v`` is the arc u->v."""
    declared, pairs = _parse_pairs(_as_text(data))
    n = declared if declared is not None else 1 + max((max(u, v) for u, v, _ in pairs), default=-1)
    return Digraph(n, ((u, v) for u, v, _ in pairs))


def serialize_graph(g: Graph | Digraph) -> str:
    """Canonical edge list: header line, then sorted pairs."""
    pairs = g.sorted_edges() if isinstance(g, Graph) else g.sorted_arcs()
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def guess_format(path: str | Path) -> str:
    return "dimacs" if str(path).endswith((".col", ".dimacs")) else "edge-list"


def read_graph(path: str | Path, format: str | None = None) -> Graph:
    return parse_graph(Path(path).read_bytes(), format or guess_format(path))


def coloring_to_json(c: Coloring) -> str:
    return json.dumps({"n": c.n, "colors": list(c.colors)})


def coloring_from_json(data: bytes | str, n: int | None = None) -> Coloring:
    try:
        obj = json.loads(_as_text(data))
    except json.JSONDecodeError as exc:
        raise ParseError(f"coloring is not valid JSON: {exc}") from None
    if isinstance(obj, list):
        colors = obj
    else:
        colors = obj.get("colors")
        if colors is None:
            raise ParseError("coloring JSON lacks 'colors'")
        if "n" in obj and obj["n"] != len(colors):
            raise ParseError(f"declared n={obj['n']} but {len(colors)} colors given")
    if n is not None and len(colors) != n:
        raise GraphError(f"coloring covers {len(colors)} vertices, graph has {n}")
    return Coloring.of(colors)
