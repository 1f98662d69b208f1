"""Named graph families and seeded random instances."""
from __future__ import annotations

from itertools import combinations

from .graph import Coloring, Digraph, Graph
from .rng import SplitMix64


def empty(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


def subdivide(g: Graph) -> Graph:
    """Subdivide every edge once; new vertices follow the originals in sorted edge order."""
    edges = []
    for k, (u, v) in enumerate(g.sorted_edges()):
        s = g.n + k
        edges += [(u, s), (s, v)]
    return Graph(g.n + g.m, edges)


def subdivided_k4() -> Graph:
    """K_4 with each edge subdivided: branch vertices 0..3, subdivision vertices 4..9."""
    return subdivide(complete(4))


def directed_path(n: int) -> Digraph:
    return Digraph(n, ((i, i + 1) for i in range(n - 1)))


def random_graph(n: int, p: float, rng: SplitMix64) -> Graph:
    """G(n, p) drawing pairs in lexicographic order."""
    return Graph(n, (e for e in combinations(range(n), 2) if rng.random() < p))


def random_graph_nm(n: int, m: int, rng: SplitMix64) -> Graph:
    """Uniform graph with exactly min(m, n choose 2) edges."""
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    return Graph(n, pairs[:m])


def random_digraph(n: int, p: float, rng: SplitMix64) -> Digraph:
    """Each ordered pair (u, v), u != v, becomes an arc with probability p."""
    return Digraph(
        n, ((u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p)
    )


def random_coloring(n: int, k: int, rng: SplitMix64) -> Coloring:
    return Coloring.of(rng.below(k) for _ in range(n))
