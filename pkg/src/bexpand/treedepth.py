"""Exact tree-depth, elimination forests and centered-coloring verifiers.

Everything here is exhaustive and guarded by explicit size limits.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import GraphError, GuardExceeded, NotCentered
from .graph import (
    Coloring,
    Graph,
    RootedForest,
    Verdict,
    connected_components,
    iter_bits,
    mask_components,
)

TREEDEPTH_LIMIT = 20
EXHAUSTIVE_LIMIT = 14


@dataclass(frozen=True)
class TreedepthResult:
    value: int
    forest: RootedForest


class TreedepthSolver:
    """Memoised tree-depth of induced subgraphs of one graph, keyed by vertex bitmask.

    Connected subsets use ``1 + min_v td(S - v)`` (lowest-id minimiser);
    disconnected ones take the max over components. The table is reused
    across queries, which is what makes repeated class-union checks cheap.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.masks = g.masks
        self._memo: dict[int, tuple[int, int]] = {}

    def _is_clique(self, mask: int) -> bool:
        return all(self.masks[v] & mask == mask & ~(1 << v) for v in iter_bits(mask))

    def _connected(self, mask: int) -> tuple[int, int]:
        hit = self._memo.get(mask)
        if hit is not None:
            return hit
        low = (mask & -mask).bit_length() - 1
        if mask & (mask - 1) == 0:
            res = (1, low)
        elif self._is_clique(mask):
            res = (bin(mask).count("1"), low)
        else:
            best, root = None, low
            for v in iter_bits(mask):
                val = 1 + self.td(mask & ~(1 << v))
                if best is None or val < best:
                    best, root = val, v
                    if best == 2:
                        break  # a connected graph on >= 2 vertices has td >= 2
            res = (best, root)
        self._memo[mask] = res
        return res

    def td(self, mask: int) -> int:
        if not mask:
            return 0
        return max(self._connected(c)[0] for c in mask_components(self.masks, mask))

    def forest(self, mask: int) -> dict[int, int]:
        """Parent map of an optimal elimination forest of g[mask]."""
        parent: dict[int, int] = {}
        stack: list[tuple[int, int | None]] = [(mask, None)]
        while stack:
            sub, above = stack.pop()
            for comp in mask_components(self.masks, sub):
                root = self._connected(comp)[1]
                if above is not None:
                    parent[root] = above
                rest = comp & ~(1 << root)
                if rest:
                    stack.append((rest, root))
        return parent


def treedepth_exact(g: Graph, limit: int = TREEDEPTH_LIMIT) -> TreedepthResult:
    if g.n > limit:
        raise GuardExceeded("treedepth_exact vertex count", g.n, limit)
    solver = TreedepthSolver(g)
    full = (1 << g.n) - 1
    value = solver.td(full)
    forest = RootedForest.from_mapping(g.n, solver.forest(full))
    return TreedepthResult(value, forest)


def _connected_masks(masks: tuple[int, ...], n: int) -> Iterator[int]:
    """Each connected vertex set exactly once, grown from its minimum vertex."""

    def grow(chosen: int, cand: int, excl: int) -> Iterator[int]:
        yield chosen
        while cand:
            wbit = cand & -cand
            cand ^= wbit
            w = wbit.bit_length() - 1
            nxt = (cand | masks[w]) & ~(chosen | wbit | excl)
            yield from grow(chosen | wbit, nxt, excl)
            excl |= wbit

    for root in range(n):
        below = (1 << root) - 1
        start = 1 << root
        yield from grow(start, masks[root] & ~below, below | start)


def connected_induced_subgraphs(g: Graph, limit: int = EXHAUSTIVE_LIMIT) -> Iterator[frozenset[int]]:
    if g.n > limit:
        raise GuardExceeded("connected subgraph enumeration vertex count", g.n, limit)
    for mask in _connected_masks(g.masks, g.n):
        yield frozenset(iter_bits(mask))


def _check_domain(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise GraphError(f"coloring covers {c.n} vertices, graph has {g.n}")


def verify_p_centered(g: Graph, c: Coloring, p: int | None, limit: int = EXHAUSTIVE_LIMIT) -> Verdict:
    """Every connected induced subgraph has a unique colour or at least p colours.

    ``p=None`` demands a unique colour everywhere (a centered colouring).
    The witness on failure is the offending vertex set, sorted.
    """
    if p is not None and p < 1:
        raise ValueError("p must be at least 1")
    _check_domain(g, c)
    if g.n > limit:
        raise GuardExceeded("centered-coloring check vertex count", g.n, limit)
    colors = c.colors
    for mask in _connected_masks(g.masks, g.n):
        counts: dict[int, int] = {}
        for v in iter_bits(mask):
            counts[colors[v]] = counts.get(colors[v], 0) + 1
        if 1 in counts.values():
            continue
        if p is not None and len(counts) >= p:
            continue
        return Verdict(False, sorted(iter_bits(mask)))
    return Verdict(True)


def is_centered_coloring(g: Graph, c: Coloring, limit: int = EXHAUSTIVE_LIMIT) -> Verdict:
    return verify_p_centered(g, c, None, limit)


def forest_from_centered_coloring(g: Graph, c: Coloring) -> RootedForest:
    """Root every component at its lowest uniquely-coloured vertex and recurse.

    Colours along any root path are distinct, so the height is at most the
    palette size. Raises NotCentered when some component has no unique colour.
    """
    _check_domain(g, c)
    parent: dict[int, int] = {}
    stack: list[tuple[list[int], int | None]] = [(list(range(g.n)), None)]
    while stack:
        vertices, above = stack.pop()
        for comp in connected_components(g, vertices):
            counts: dict[int, int] = {}
            for v in comp:
                counts[c[v]] = counts.get(c[v], 0) + 1
            unique = [v for v in comp if counts[c[v]] == 1]
            if not unique:
                raise NotCentered(tuple(comp))
            root = unique[0]
            if above is not None:
                parent[root] = above
            rest = [v for v in comp if v != root]
            if rest:
                stack.append((rest, root))
    return RootedForest.from_mapping(g.n, parent)
