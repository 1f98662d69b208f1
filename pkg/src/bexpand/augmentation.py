"""Transitive fraternal augmentations and (a, b)-reachability augmentations."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .density import orient_min_indegree
from .errors import GraphError, GuardExceeded
from .graph import Digraph, Edge, Graph, Verdict

AB_MAX_LENGTH_SUM = 8
AB_MAX_VERTICES = 50


class Violation(NamedTuple):
    x: int
    y: int
    z: int
    kind: str  # "transitivity" or "fraternity"


@dataclass(frozen=True)
class StepStats:
    md: int
    arcs: int
    transitivity_added: int
    fraternity_added: int


def _transitivity_arcs(g: Digraph) -> set[Edge]:
    forced = set()
    for z in range(g.n):
        for x in g.in_adj[z]:
            for y in g.out_adj[z]:
                # x -> z -> x would be a loop
                if x != y and (x, y) not in g.arcs:
                    forced.add((x, y))
    return forced


def _fraternity_demands(g: Digraph, present: set[Edge] | frozenset[Edge]) -> set[Edge]:
    demands = set()
    for z in range(g.n):
        ins = g.in_adj[z]
        for i, x in enumerate(ins):
            for y in ins[i + 1:]:
                if (x, y) not in present and (y, x) not in present:
                    demands.add((x, y))
    return demands


def _augment_step(g: Digraph) -> tuple[Digraph, int, int]:
    trans = _transitivity_arcs(g)
    present = set(g.arcs) | trans
    demands = _fraternity_demands(g, present)
    oriented = orient_min_indegree(Graph(g.n, demands)).arcs if demands else frozenset()
    return Digraph(g.n, present | oriented), len(trans), len(demands)


def tight_augment(g: Digraph) -> Digraph:
    """One 1-transitive fraternal augmentation adding only what the rules demand.

    Obligations are read off ``g`` alone. Transitivity arcs are forced; the
    fraternity pairs still non-adjacent after them are oriented so that the
    demand graph alone has the least possible maximum indegree.
    """
    return _augment_step(g)[0]


@dataclass(frozen=True)
class AugmentationTrace:
    """G_1 = g, G_2, ... each a tight augmentation of the previous one.

    Only distinct digraphs are stored: once a fixed point is hit at index
    ``fixed_point`` the sequence is constant from there on.
    """

    digraphs: tuple[Digraph, ...]
    stats: tuple[StepStats, ...]
    requested_steps: int
    fixed_point: int | None

    def at(self, i: int) -> Digraph:
        """Digraph after i augmentation steps (0 <= i <= requested_steps)."""
        if not 0 <= i <= self.requested_steps:
            raise IndexError(i)
        return self.digraphs[min(i, len(self.digraphs) - 1)]

    @property
    def final(self) -> Digraph:
        return self.digraphs[-1]

    def md_sequence(self) -> list[int]:
        return [self.at(i).md for i in range(self.requested_steps + 1)]

    def to_dict(self) -> dict:
        return {
            "requested_steps": self.requested_steps,
            "fixed_point": self.fixed_point,
            "n": self.digraphs[0].n,
            "steps": [
                {
                    "index": i,
                    "md": s.md,
                    "arc_count": s.arcs,
                    "transitivity_added": s.transitivity_added,
                    "fraternity_added": s.fraternity_added,
                    "arcs": [list(a) for a in d.sorted_arcs()],
                }
                for i, (d, s) in enumerate(zip(self.digraphs, self.stats))
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def augment_sequence(g: Digraph, steps: int) -> AugmentationTrace:
    if steps < 0:
        raise ValueError("steps must be non-negative")
    digraphs = [g]
    stats = [StepStats(g.md, len(g.arcs), 0, 0)]
    fixed = None
    for i in range(steps):
        nxt, nt, nf = _augment_step(digraphs[-1])
        if nxt == digraphs[-1]:
            fixed = i
            break
        digraphs.append(nxt)
        stats.append(StepStats(nxt.md, len(nxt.arcs), nt, nf))
    return AugmentationTrace(tuple(digraphs), tuple(stats), steps, fixed)


def is_transitive_fraternal_closed(base: Digraph, aug: Digraph) -> Verdict:
    """Check that ``aug`` meets every transitivity/fraternity obligation of ``base``.

    The witness is the list of unmet obligations as ``Violation`` tuples.
    """
    if base.n != aug.n:
        raise GraphError("digraphs have different vertex sets")
    if not base.arcs <= aug.arcs:
        missing = sorted(base.arcs - aug.arcs)
        raise GraphError(f"base is not contained in the augmentation (missing {missing[:5]})")
    violations = []
    for z in range(base.n):
        ins, outs = base.in_adj[z], base.out_adj[z]
        for x in ins:
            for y in outs:
                if x != y and (x, y) not in aug.arcs:
                    violations.append(Violation(x, y, z, "transitivity"))
        for i, x in enumerate(ins):
            for y in ins[i + 1:]:
                if not aug.adjacent(x, y):
                    violations.append(Violation(x, y, z, "fraternity"))
    return Verdict(not violations, violations)


def _paths_into(g: Digraph, z: int, max_len: int) -> list[tuple[int, int, int]]:
    """All simple directed paths ending at z of length <= max_len.

    Each path is (start, mask of its vertices other than z, length).
    """
    out = [(z, 0, 0)]
    stack = [(z, 1 << z, 0)]
    while stack:
        head, used, length = stack.pop()
        if length == max_len:
            continue
        for w in g.in_adj[head]:
            if not used >> w & 1:
                nused = used | (1 << w)
                out.append((w, nused & ~(1 << z), length + 1))
                stack.append((w, nused, length + 1))
    return out


def ab_reachable_pairs(
    g: Digraph,
    a: int,
    b: int,
    max_length_sum: int = AB_MAX_LENGTH_SUM,
    max_vertices: int = AB_MAX_VERTICES,
) -> set[Edge]:
    """Pairs (x, y), x != y, with y (a, b)-reachable from x.

    Witness: a path x -> ... -> z of length <= a and a path y -> ... -> z of
    length <= b sharing only z. Either path may have length zero.
    """
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative")
    if a + b > max_length_sum:
        raise GuardExceeded("ab_reachable_pairs path length a+b", a + b, max_length_sum)
    if g.n > max_vertices:
        raise GuardExceeded("ab_reachable_pairs vertex count", g.n, max_vertices)
    pairs = set()
    for z in range(g.n):
        paths = _paths_into(g, z, max(a, b))
        firsts = {(s, m) for s, m, ln in paths if ln <= a}
        seconds = {(s, m) for s, m, ln in paths if ln <= b}
        for x, mx in firsts:
            for y, my in seconds:
                if x != y and not mx & my:
                    pairs.add((x, y))
    return pairs


def ab_augment(g: Digraph, a: int, b: int, **guards) -> Digraph:
    """An (a, b)-augmentation: every reachable pair joined in at least one direction.

    Arcs of ``g`` on demanded pairs are kept as they are; the remaining pairs
    are oriented to minimise the maximum indegree of that residual demand.
    """
    pairs = ab_reachable_pairs(g, a, b, **guards)
    demanded = {(min(x, y), max(x, y)) for x, y in pairs}
    kept = {(u, v) for u, v in g.arcs if (min(u, v), max(u, v)) in demanded}
    covered = {(min(u, v), max(u, v)) for u, v in kept}
    residual = demanded - covered
    oriented = orient_min_indegree(Graph(g.n, residual)).arcs if residual else frozenset()
    return Digraph(g.n, kept | oriented)
