"""Exact maximum subgraph density, optimal orientations, degeneracy and greedy coloring."""
from __future__ import annotations

import heapq
from fractions import Fraction
from math import ceil
from typing import Sequence

from .errors import GraphError
from .flow import FlowNetwork
from .graph import Coloring, Digraph, Graph


def _denser_than(g: Graph, bound: Fraction) -> list[int]:
    """Vertex set H maximising |E(H)| - bound*|V(H)|; empty when that maximum is <= 0.

    Goldberg-style network: source -> edge node (cap b), edge node -> both
    endpoints (cap b), vertex -> sink (cap a), where bound = a/b.
    """
    a, b = bound.numerator, bound.denominator
    edges = g.sorted_edges()
    m = len(edges)
    s, t = 0, 1
    net = FlowNetwork(2 + m + g.n)
    for k, (u, v) in enumerate(edges):
        net.add_edge(s, 2 + k, b)
        net.add_edge(2 + k, 2 + m + u, b)
        net.add_edge(2 + k, 2 + m + v, b)
    for v in range(g.n):
        net.add_edge(2 + m + v, t, a)
    if net.max_flow(s, t) == b * m:
        return []
    side = net.source_side(s)
    return sorted(x - 2 - m for x in side if x >= 2 + m)


def induced_density(g: Graph, vertices: Sequence[int]) -> Fraction:
    inside = set(vertices)
    e = sum(1 for u, v in g.edges if u in inside and v in inside)
    return Fraction(e, len(inside))


def densest_subgraph(g: Graph) -> tuple[Fraction, list[int]]:
    """Exact max |E(H)|/|V(H)| over nonempty subgraphs, with a maximising vertex set.

    Binary search on the density value; two distinct densities with
    denominators at most n differ by at least 1/n**2, so once the bracket
    (lo, hi] is narrower than that, the subgraph witnessing ``> lo`` is optimal.
    """
    if g.n == 0:
        raise GraphError("max density of the empty graph is undefined")
    if g.m == 0:
        return Fraction(0), [0]
    n = g.n
    lo, hi = Fraction(0), Fraction(n - 1, 2)
    witness = _denser_than(g, lo)
    gap = Fraction(1, n * n)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        found = _denser_than(g, mid)
        if found:
            lo, witness = mid, found
        else:
            hi = mid
    return induced_density(g, witness), witness


def max_density(g: Graph) -> Fraction:
    return densest_subgraph(g)[0]


def orient_min_indegree(g: Graph) -> Digraph:
    """Orientation of g whose maximum indegree is the least possible, ceil(max density)."""
    if g.m == 0:
        return Digraph(g.n)
    k = ceil(max_density(g))
    edges = g.sorted_edges()
    m = len(edges)
    s, t = 0, 1
    net = FlowNetwork(2 + m + g.n)
    heads = []
    for idx, (u, v) in enumerate(edges):
        net.add_edge(s, 2 + idx, 1)
        # lower endpoint first: it receives the edge when both are free
        heads.append((net.add_edge(2 + idx, 2 + m + u, 1), net.add_edge(2 + idx, 2 + m + v, 1)))
    for v in range(g.n):
        net.add_edge(2 + m + v, t, k)
    if net.max_flow(s, t) != m:
        raise AssertionError("orientation flow infeasible; max_density is inconsistent")
    arcs = []
    for (u, v), (into_u, _) in zip(edges, heads):
        arcs.append((v, u) if net.flow_on(into_u) else (u, v))
    return Digraph(g.n, arcs)


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Smallest-degree-first elimination order and the degeneracy.

    Every vertex has at most ``degeneracy`` neighbours later in the order.
    Ties go to the lowest vertex id.
    """
    deg = [g.degree(v) for v in range(g.n)]
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: list[int] = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        d = max(d, dv)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return order, d


def smallest_last_order(g: Graph) -> list[int]:
    """Reverse elimination order: each vertex has at most `degeneracy` earlier neighbours."""
    return degeneracy_order(g)[0][::-1]


def greedy_color(g: Graph, order: Sequence[int]) -> Coloring:
    """Colour vertices in ``order``, each with the least colour unused by its coloured neighbours."""
    if sorted(order) != list(range(g.n)):
        raise GraphError("order must be a permutation of the vertices")
    color = [-1] * g.n
    for v in order:
        used = {color[w] for w in g.adj[v]}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return Coloring.of(color)
