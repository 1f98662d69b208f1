"""Grad (greatest reduced average density) at desk scale.

The rank-r grad is the best edge/vertex ratio of a quotient G/P over families
P of pairwise disjoint balls of radius at most r; with complexity c each
vertex may lie in up to c balls (repeats allowed). Exact values come from
exhaustive family enumeration; larger graphs get seeded lower bounds.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .density import max_density
from .errors import GuardExceeded
from .graph import Graph, iter_bits, lex_product, radius_and_center, to_mask
from .rng import SplitMix64
from .treedepth import _connected_masks

GRAD_LIMIT = 10


@dataclass(frozen=True)
class BallFamily:
    balls: tuple[frozenset[int], ...]
    radius: int
    complexity: int

    @classmethod
    def of(cls, g: Graph, balls: Iterable[Iterable[int]]) -> "BallFamily":
        sets = tuple(frozenset(b) for b in balls)
        radius = 0
        for b in sets:
            # radius_and_center rejects empty and disconnected balls
            radius = max(radius, radius_and_center(g, b)[0])
        load: dict[int, int] = {}
        for b in sets:
            for v in b:
                load[v] = load.get(v, 0) + 1
        return cls(sets, radius, max(load.values(), default=0))

    def __len__(self) -> int:
        return len(self.balls)


def quotient(g: Graph, family: BallFamily) -> Graph:
    """Balls become vertices; two are adjacent when they overlap or an edge joins them."""
    masks = [to_mask(b) for b in family.balls]
    reach = [m | _neighbourhood(g.masks, m) for m in masks]
    edges = [
        (i, j)
        for i in range(len(masks))
        for j in range(i + 1, len(masks))
        if masks[i] & reach[j]
    ]
    return Graph(len(masks), edges)


def _neighbourhood(masks: tuple[int, ...], ball: int) -> int:
    out = 0
    for v in iter_bits(ball):
        out |= masks[v]
    return out


def _mask_radius(masks: tuple[int, ...], ball: int) -> int:
    best = None
    for v in iter_bits(ball):
        seen = frontier = 1 << v
        ecc = 0
        while seen != ball:
            frontier = _neighbourhood(masks, frontier) & ball & ~seen
            seen |= frontier
            ecc += 1
        if best is None or ecc < best:
            best = ecc
    return best or 0


def _balls(g: Graph, r: int) -> list[int]:
    """All connected vertex sets of radius <= r, as bitmasks."""
    out = []
    for mask in _connected_masks(g.masks, g.n):
        if r >= g.n or _mask_radius(g.masks, mask) <= r:
            out.append(mask)
    return out


def _ratio_bound(e: int, k: int, room: int) -> Fraction:
    """Best ratio reachable by adding up to ``room`` balls to k balls with e edges."""
    best = Fraction(e, k) if k else Fraction(0)
    for j in range(1, room + 1):
        best = max(best, Fraction(e + j * k + j * (j - 1) // 2, k + j))
    return best


def _best_disjoint_family(g: Graph, balls: list[int]) -> tuple[int, int]:
    by_min: dict[int, list[int]] = {}
    for b in sorted(balls, key=lambda m: (bin(m).count("1"), m)):
        by_min.setdefault((b & -b).bit_length() - 1, []).append(b)
    best = [0, 1]  # edges, balls
    masks = g.masks

    def rec(undecided: int, fam: list[tuple[int, int]], e: int) -> None:
        k = len(fam)
        if k and e * best[1] > best[0] * k:
            best[0], best[1] = e, k
        if not undecided:
            return
        if _ratio_bound(e, k, bin(undecided).count("1")) <= Fraction(best[0], best[1]):
            return
        low = undecided & -undecided
        v = low.bit_length() - 1
        for ball in by_min.get(v, ()):
            if ball & ~undecided:
                continue
            touched = sum(1 for _, reach in fam if ball & reach)
            fam.append((ball, ball | _neighbourhood(masks, ball)))
            rec(undecided & ~ball, fam, e + touched)
            fam.pop()
        rec(undecided & ~low, fam, e)

    rec((1 << g.n) - 1, [], 0)
    return best[0], best[1]


def grad_exact(g: Graph, r: int, limit: int = GRAD_LIMIT) -> Fraction:
    """Exact rank-r grad by enumerating families of disjoint balls."""
    if r < 0:
        raise ValueError("rank must be non-negative")
    if g.n > limit:
        raise GuardExceeded("grad_exact vertex count", g.n, limit)
    if g.n == 0:
        return Fraction(0)
    e, k = _best_disjoint_family(g, _balls(g, r))
    return Fraction(e, k)


def grad_complexity_direct(g: Graph, r: int, c: int, limit: int = GRAD_LIMIT) -> Fraction:
    """Rank-r, complexity-c grad by enumerating multisets of balls with vertex load <= c."""
    if c < 1:
        raise ValueError("complexity must be at least 1")
    if r < 0:
        raise ValueError("rank must be non-negative")
    if g.n * c > limit:
        raise GuardExceeded("grad_complexity_direct size n*c", g.n * c, limit)
    if g.n == 0:
        return Fraction(0)
    balls = _balls(g, r)
    reach = [b | _neighbourhood(g.masks, b) for b in balls]
    best = [0, 1]

    def rec(i: int, load: list[int], fam: list[int], e: int) -> None:
        k = len(fam)
        if k and e * best[1] > best[0] * k:
            best[0], best[1] = e, k
        if i == len(balls):
            return
        if _ratio_bound(e, k, sum(c - x for x in load)) <= Fraction(best[0], best[1]):
            return
        ball = balls[i]
        verts = list(iter_bits(ball))
        added = 0
        gained = 0
        while all(load[v] < c for v in verts):
            # another copy of ball i; earlier copies count as touching it
            gained += sum(1 for j in fam if ball & reach[j])
            for v in verts:
                load[v] += 1
            fam.append(i)
            added += 1
        # copies are pushed greedily; unwind one at a time, recursing at each count
        while True:
            rec(i + 1, load, fam, e + gained)
            if not added:
                break
            fam.pop()
            added -= 1
            for v in verts:
                load[v] -= 1
            gained -= sum(1 for j in fam if ball & reach[j])

    rec(0, [0] * g.n, [], 0)
    return Fraction(best[0], best[1])


def grad_complexity_exact(
    g: Graph, r: int, c: int, method: str = "lex", limit: int = GRAD_LIMIT
) -> Fraction:
    """Rank-r, complexity-c grad; ``method`` is "lex" (rank-r grad of g * K_c) or "direct"."""
    if c < 1:
        raise ValueError("complexity must be at least 1")
    if method == "direct":
        return grad_complexity_direct(g, r, c, limit)
    if method != "lex":
        raise ValueError(f"unknown method {method!r}")
    if g.n * c > limit:
        raise GuardExceeded("grad_complexity_exact size n*c", g.n * c, limit)
    return grad_exact(lex_product(g, c), r, limit)


def greedy_ball_family(g: Graph, r: int, order: list[int]) -> list[int]:
    """Disjoint BFS balls of depth <= r grown from each still-free vertex in ``order``."""
    free = (1 << g.n) - 1
    balls = []
    for v in order:
        if not free >> v & 1:
            continue
        ball = frontier = 1 << v
        for _ in range(r):
            frontier = _neighbourhood(g.masks, frontier) & free & ~ball
            if not frontier:
                break
            ball |= frontier
        free &= ~ball
        balls.append(ball)
    return balls


def grad_lower_bound(g: Graph, r: int, seed: int = 0) -> Fraction:
    """Density of a quotient by greedily grown balls; a valid lower bound on the rank-r grad.

    Vertex order is a SplitMix64 shuffle of 0..n-1. Every depth 0..r is
    tried with that order and the densest quotient subgraph is kept.
    """
    if r < 0:
        raise ValueError("rank must be non-negative")
    if g.n == 0:
        return Fraction(0)
    order = list(range(g.n))
    SplitMix64(seed).shuffle(order)
    best = Fraction(0)
    for depth in range(r + 1):
        balls = greedy_ball_family(g, depth, order)
        family = BallFamily(tuple(frozenset(iter_bits(b)) for b in balls), depth, 1)
        best = max(best, max_density(quotient(g, family)))
    return best


@dataclass(frozen=True)
class ProfileEntry:
    value: Fraction
    kind: str  # "exact" or "lower-bound"


@dataclass(frozen=True)
class ExpansionProfile:
    entries: dict[int, ProfileEntry]

    def to_dict(self) -> dict:
        return {
            str(r): {"value": f"{e.value.numerator}/{e.value.denominator}", "kind": e.kind}
            for r, e in sorted(self.entries.items())
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def expansion_profile(g: Graph, r_max: int, limit: int = GRAD_LIMIT, seed: int = 0) -> ExpansionProfile:
    """Rank 0..r_max grads: exact within the guard, heuristic lower bounds beyond it."""
    if r_max < 0:
        raise ValueError("r_max must be non-negative")
    entries: dict[int, ProfileEntry] = {}
    floor = Fraction(0)
    for r in range(r_max + 1):
        if g.n == 0:
            entries[r] = ProfileEntry(Fraction(0), "exact")
        elif r == 0:
            entries[r] = ProfileEntry(max_density(g), "exact")
        elif g.n <= limit:
            entries[r] = ProfileEntry(grad_exact(g, r, limit), "exact")
        else:
            # a lower bound at a smaller rank is still a lower bound here
            entries[r] = ProfileEntry(max(floor, grad_lower_bound(g, r, seed)), "lower-bound")
        floor = max(floor, entries[r].value)
    return ExpansionProfile(entries)
