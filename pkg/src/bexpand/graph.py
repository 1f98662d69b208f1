"""Core graph types: simple graphs, loopless digraphs, rooted forests and colorings.

Vertices are always the dense range ``0..n-1``. All objects are immutable
once built; operations return new objects.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphError

Edge = tuple[int, int]


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise GraphError(f"vertex {v} out of range 0..{n - 1}")


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "masks")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise GraphError("negative vertex count")
        norm = set()
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        # neighbourhoods as int bitmasks, used by the exhaustive routines
        object.__setattr__(
            self, "masks", tuple(sum(1 << w for w in a) for a in self.adj)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to 0..k-1, plus the new->old vertex map."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(old), edges), old

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """Loopless digraph; at most one arc per ordered pair, both directions allowed."""

    __slots__ = ("n", "arcs", "out_adj", "in_adj", "indegree")

    def __init__(self, n: int, arcs: Iterable[Edge] = ()):
        if n < 0:
            raise GraphError("negative vertex count")
        arcset = set()
        for u, v in arcs:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            arcset.add((u, v))
        outs: list[list[int]] = [[] for _ in range(n)]
        ins: list[list[int]] = [[] for _ in range(n)]
        for u, v in arcset:
            outs[u].append(v)
            ins[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", frozenset(arcset))
        object.__setattr__(self, "out_adj", tuple(tuple(sorted(a)) for a in outs))
        object.__setattr__(self, "in_adj", tuple(tuple(sorted(a)) for a in ins))
        object.__setattr__(self, "indegree", tuple(len(a) for a in ins))

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    @property
    def md(self) -> int:
        """Maximum indegree."""
        return max(self.indegree, default=0)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs

    def sorted_arcs(self) -> list[Edge]:
        return sorted(self.arcs)

    def underlying(self) -> Graph:
        return Graph(self.n, self.arcs)

    def __le__(self, other: "Digraph") -> bool:
        return self.n == other.n and self.arcs <= other.arcs

    def __eq__(self, other) -> bool:
        return isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)}, md={self.md})"


@dataclass(frozen=True)
class RootedForest:
    """Parent pointers; ``parent[v] is None`` marks a root."""

    parent: tuple[int | None, ...]

    def __post_init__(self):
        n = len(self.parent)
        for v, p in enumerate(self.parent):
            if p is not None:
                _check_vertex(p, n)
        # every vertex must reach a root within n hops
        for v in range(n):
            seen = 0
            x: int | None = v
            while x is not None:
                seen += 1
                if seen > n:
                    raise GraphError(f"parent relation has a cycle through {v}")
                x = self.parent[x]

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def roots(self) -> frozenset[int]:
        return frozenset(v for v, p in enumerate(self.parent) if p is None)

    def ancestors(self, v: int) -> list[int]:
        """Strict ancestors of v, nearest first."""
        out = []
        p = self.parent[v]
        while p is not None:
            out.append(p)
            p = self.parent[p]
        return out

    def vertex_height(self, v: int) -> int:
        return 1 + len(self.ancestors(v))

    def height(self) -> int:
        return max((self.vertex_height(v) for v in range(self.n)), default=0)

    def children(self) -> list[list[int]]:
        kids: list[list[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(v)
        return kids

    @classmethod
    def from_mapping(cls, n: int, parent: dict[int, int]) -> "RootedForest":
        return cls(tuple(parent.get(v) for v in range(n)))


@dataclass(frozen=True)
class Coloring:
    """Total vertex colouring; ``colors[v]`` is a non-negative integer."""

    colors: tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(c, int) or c < 0 for c in self.colors):
            raise GraphError("colors must be non-negative integers")

    @classmethod
    def of(cls, colors: Iterable[int]) -> "Coloring":
        return cls(tuple(colors))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def palette(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def is_proper(self, g: Graph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)


def lex_product(g: Graph, c: int) -> Graph:
    """Lexicographic product of g with K_c; vertex (x, i) gets id x*c + i."""
    if c < 1:
        raise GraphError("clique size must be at least 1")
    edges = []
    for x in range(g.n):
        for i in range(c):
            for j in range(i + 1, c):
                edges.append((x * c + i, x * c + j))
    for x, y in g.edges:
        for i in range(c):
            for j in range(c):
                edges.append((x * c + i, y * c + j))
    return Graph(g.n * c, edges)


def closure(f: RootedForest) -> Graph:
    """Graph joining every vertex to each of its strict ancestors."""
    return Graph(f.n, ((a, v) for v in range(f.n) for a in f.ancestors(v)))


def bfs_distances(g: Graph, source: int, allowed: frozenset[int] | set[int] | None = None) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in dist and (allowed is None or y in allowed):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def radius_and_center(g: Graph, ball: Iterable[int]) -> tuple[int, int]:
    """Radius of g[ball] and its lowest-id center. The ball must induce a connected graph."""
    members = frozenset(ball)
    if not members:
        raise GraphError("empty ball")
    for v in members:
        _check_vertex(v, g.n)
    best: tuple[int, int] | None = None
    for r in sorted(members):
        dist = bfs_distances(g, r, members)
        if len(dist) != len(members):
            raise GraphError(f"ball {sorted(members)} does not induce a connected subgraph")
        ecc = max(dist.values())
        if best is None or ecc < best[0]:
            best = (ecc, r)
    assert best is not None
    return best


def connected_components(g: Graph, vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Components (sorted lists, ordered by minimum vertex) of g or of g[vertices]."""
    allowed = frozenset(range(g.n)) if vertices is None else frozenset(vertices)
    seen: set[int] = set()
    comps = []
    for v in sorted(allowed):
        if v in seen:
            continue
        comp = bfs_distances(g, v, allowed)
        seen.update(comp)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph, vertices: Iterable[int] | None = None) -> bool:
    return len(connected_components(g, vertices)) <= 1


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Sequence[int] | Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_components(masks: Sequence[int], subset: int) -> list[int]:
    """Connected components of the subgraph induced by ``subset``, as bitmasks."""
    comps = []
    rest = subset
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= masks[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verifier: ``ok`` plus a witness (violation) when it fails."""

    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok
