from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest

from bexpand.graph import Graph
from bexpand.rng import SplitMix64

FIXTURES = Path(__file__).parent / "fixtures"


def from_nx(h: nx.Graph) -> Graph:
    return Graph(h.number_of_nodes(), h.edges())


def atlas(max_n: int, connected_only: bool = False) -> list[Graph]:
    """All graphs on 1..max_n vertices up to isomorphism (networkx atlas, n <= 7)."""
    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > max_n:
            break
        if connected_only and not nx.is_connected(h):
            continue
        out.append(from_nx(h))
    return out


def brute_max_density(g: Graph) -> Fraction:
    """Max over all nonempty vertex subsets of induced edges / vertices."""
    best = Fraction(0)
    edges = list(g.edges)
    for k in range(1, g.n + 1):
        for sub in combinations(range(g.n), k):
            s = set(sub)
            e = sum(1 for u, v in edges if u in s and v in s)
            best = max(best, Fraction(e, k))
    return best


def exists_orientation(g: Graph, k: int) -> bool:
    """Backtracking over all orientations with every indegree <= k."""
    edges = g.sorted_edges()
    indeg = [0] * g.n

    def place(i: int) -> bool:
        if i == len(edges):
            return True
        for head in edges[i]:
            if indeg[head] < k:
                indeg[head] += 1
                if place(i + 1):
                    return True
                indeg[head] -= 1
        return False

    return place(0)


def subset_max_density(g: Graph) -> Fraction:
    """Max induced density over all 2^n subsets, edge counts built up one vertex at a time."""
    edges = [0] * (1 << g.n)
    best = Fraction(0)
    for s in range(1, 1 << g.n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        edges[s] = edges[rest] + bin(g.masks[v] & rest).count("1")
        best = max(best, Fraction(edges[s], bin(s).count("1")))
    return best


def recursive_td(g: Graph) -> int:
    """Plain recursion on frozensets: max over components, 1 + min over deletions."""

    def components(vs):
        left, out = set(vs), []
        while left:
            stack = [left.pop()]
            comp = set(stack)
            while stack:
                for w in g.adj[stack.pop()]:
                    if w in left:
                        left.discard(w)
                        comp.add(w)
                        stack.append(w)
            out.append(frozenset(comp))
        return out

    @lru_cache(maxsize=None)
    def td(vs: frozenset) -> int:
        if not vs:
            return 0
        comps = components(vs)
        if len(comps) > 1:
            return max(td(c) for c in comps)
        if len(vs) == 1:
            return 1
        return 1 + min(td(vs - {v}) for v in vs)

    return td(frozenset(range(g.n)))


@pytest.fixture
def rng():
    return SplitMix64(20240601)


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES
