"""Low tree-depth and p-centered colorings from transitive fraternal augmentations.

Pipeline: orient with least maximum indegree, augment ``steps`` times, then
greedily colour the underlying graph of the last augmentation in
smallest-last order, which uses at most ``2*md + 1`` colours.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .augmentation import AugmentationTrace, augment_sequence
from .density import greedy_color, orient_min_indegree, smallest_last_order
from .errors import GraphError, GuardExceeded
from .graph import Coloring, Graph, Verdict, iter_bits, mask_components, to_mask
from .treedepth import TREEDEPTH_LIMIT, TreedepthSolver

CHI_P_LIMIT = 8


def _ceil_log2(p: int) -> int:
    return (p - 1).bit_length()


@dataclass(frozen=True)
class StepBudget:
    p: int
    t: int
    steps: int
    origin: str  # "N(p,t)", "R(p)" or "custom"


def step_budget(p: int, t: int | None = None) -> StepBudget:
    """N(p, t) = 1 + (t - 1)(2 + ceil(log2 p)); with t omitted this is R(p) = N(p, p)."""
    if p < 1:
        raise ValueError("p must be at least 1")
    if t is not None and t < 1:
        raise ValueError("t must be at least 1")
    origin = "R(p)" if t is None else "N(p,t)"
    t = p if t is None else t
    return StepBudget(p, t, 1 + (t - 1) * (2 + _ceil_log2(p)), origin)


def default_steps(p: int, goal: str) -> int:
    """Augmentation steps used for a p-centered goal or a low tree-depth goal."""
    if goal == "centered":
        return step_budget(p, p).steps
    if goal == "lowtd":
        return step_budget(p + 1, p + 1).steps
    raise ValueError(f"unknown goal {goal!r}")


def pipeline_coloring(g: Graph, p: int, steps: int) -> tuple[Coloring, AugmentationTrace]:
    if p < 1:
        raise ValueError("p must be at least 1")
    if steps < 0:
        raise ValueError("steps must be non-negative")
    trace = augment_sequence(orient_min_indegree(g), steps)
    h = trace.final.underlying()
    coloring = greedy_color(h, smallest_last_order(h))
    assert coloring.palette <= 2 * trace.final.md + 1
    return coloring, trace


def _check_domain(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise GraphError(f"coloring covers {c.n} vertices, graph has {g.n}")


@dataclass(frozen=True)
class LowTreedepthViolation:
    classes: tuple[int, ...]
    component: tuple[int, ...]
    treedepth: int


def _class_masks(c: Coloring) -> dict[int, int]:
    return {color: to_mask(vs) for color, vs in sorted(c.classes().items())}


def _low_td_check(
    solver: TreedepthSolver, classes: dict[int, int], p: int, strict: bool
) -> LowTreedepthViolation | None:
    top = p - 1 if strict else p
    colors = sorted(classes)
    for i in range(1, min(top, len(colors)) + 1):
        for chosen in combinations(colors, i):
            union = 0
            for col in chosen:
                union |= classes[col]
            if solver.td(union) > i:
                for comp in mask_components(solver.masks, union):
                    depth = solver.td(comp)
                    if depth > i:
                        return LowTreedepthViolation(chosen, tuple(iter_bits(comp)), depth)
    return None


def verify_low_treedepth(
    g: Graph, c: Coloring, p: int, strict: bool = False, limit: int = TREEDEPTH_LIMIT
) -> Verdict:
    """Any i <= p colour classes induce a graph of tree-depth at most i.

    With ``strict=True`` only unions of i < p classes are checked, the
    reading under which a p-centered colouring always qualifies. ``limit``
    bounds the size of any class union handed to the tree-depth oracle.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    _check_domain(g, c)
    classes = _class_masks(c)
    top = p - 1 if strict else p
    sizes = sorted((bin(m).count("1") for m in classes.values()), reverse=True)
    largest_union = sum(sizes[:top])
    if largest_union > limit:
        raise GuardExceeded("verify_low_treedepth class union size", largest_union, limit)
    bad = _low_td_check(TreedepthSolver(g), classes, p, strict)
    return Verdict(bad is None, bad)


def chi_p_exact(g: Graph, p: int, strict: bool = False, limit: int = CHI_P_LIMIT) -> int:
    """Least palette of a colouring passing verify_low_treedepth(g, ., p, strict).

    Colourings are enumerated as restricted-growth strings (vertex 0 gets
    colour 0, colours introduced in increasing order), classes are kept
    independent, and branches using as many colours as the best so far are cut.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    if g.n > limit:
        raise GuardExceeded("chi_p_exact vertex count", g.n, limit)
    if g.n == 0:
        return 0
    solver = TreedepthSolver(g)
    n = g.n
    colors = [0] * n
    best = n  # the rainbow colouring always qualifies
    proper = p > 1 or not strict  # single classes are checked, so they must be independent

    def search(v: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if v == n:
            classes: dict[int, int] = {}
            for x, col in enumerate(colors):
                classes[col] = classes.get(col, 0) | (1 << x)
            if _low_td_check(solver, classes, p, strict) is None:
                best = used
            return
        nbrs = g.adj[v]
        for col in range(used + 1):
            if col == used and used + 1 >= best:
                break
            if proper and col < used and any(w < v and colors[w] == col for w in nbrs):
                continue
            colors[v] = col
            search(v + 1, max(used, col + 1))

    search(0, 0)
    return best


def product_coloring(
    g: Graph, base: Coloring, p: int, sub: Mapping[frozenset[int], Mapping[int, int]]
) -> Coloring:
    """Product of ``base`` with one colouring per p-subset P of base colours.

    ``sub[P]`` maps each vertex of G_P (the union of the classes in P) to a
    colour. Vertex v receives the tuple (base(v), c_P(v) for all P), with 0
    standing in where v lies outside G_P; tuples are renumbered in order of
    first appearance.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    _check_domain(g, base)
    classes = base.classes()
    palette = sorted(classes)
    size = min(p, len(palette))
    subsets = [frozenset(s) for s in combinations(palette, size)]
    for key in subsets:
        if key not in sub:
            raise GraphError(f"missing coloring for color subset {sorted(key)}")
        domain = {v for col in key for v in classes[col]}
        if set(sub[key]) != domain:
            raise GraphError(f"coloring for subset {sorted(key)} does not cover exactly G_P")
    codes: dict[tuple, int] = {}
    out = []
    for v in range(g.n):
        key = (base[v],) + tuple(sub[s].get(v, 0) for s in subsets)
        out.append(codes.setdefault(key, len(codes)))
    return Coloring.of(out)
