"""Command-line interface: ``bexpand {augment,color,treedepth,grad,verify}``.

Every command prints a report (JSON by default, schema 1). Exit status is 0
when all requested verdicts hold, 1 when a verdict is false and 2 on usage,
input or guard errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .augmentation import augment_sequence
from .decomposition import default_steps, pipeline_coloring, verify_low_treedepth
from .density import max_density, orient_min_indegree
from .errors import GraphError, GuardExceeded
from .gradlab import (
    GRAD_LIMIT,
    expansion_profile,
    grad_complexity_exact,
    grad_exact,
    grad_lower_bound,
)
from .io import coloring_from_json, coloring_to_json, guess_format, parse_digraph, parse_graph
from .treedepth import EXHAUSTIVE_LIMIT, TREEDEPTH_LIMIT, treedepth_exact, verify_p_centered

SCHEMA = 1


def _fraction(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def _load(path: str, fmt: str | None, directed: bool = False):
    data = Path(path).read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    if directed:
        return parse_digraph(data), digest
    return parse_graph(data, fmt or guess_format(path)), digest


def _report(args, command: str, digest: str, parameters: dict, guards: dict, results: dict) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "input": {"path": args.input, "sha256": digest},
        "parameters": parameters,
        "guards": guards,
        "results": results,
    }


def cmd_augment(args) -> tuple[dict, int]:
    g, digest = _load(args.input, args.input_format, directed=args.directed)
    if args.steps is not None:
        steps, origin = args.steps, "custom"
    elif args.p is not None:
        steps = default_steps(args.p, args.goal)
        origin = "N(p,p)" if args.goal == "centered" else "N(p+1,p+1)"
    else:
        raise GraphError("give either --steps or --p")
    start = g if args.directed else orient_min_indegree(g)
    trace = augment_sequence(start, steps)
    per_step = [
        {
            "index": i,
            "md": s.md,
            "arcs": s.arcs,
            "transitivity_added": s.transitivity_added,
            "fraternity_added": s.fraternity_added,
        }
        for i, s in enumerate(trace.stats)
    ]
    results = {
        "steps": steps,
        "step_origin": origin,
        "fixed_point": trace.fixed_point,
        "final_md": trace.final.md,
        "final_arcs": len(trace.final.arcs),
        "md_sequence": trace.md_sequence(),
        "per_step": per_step,
    }
    params = {"steps": args.steps, "p": args.p, "goal": args.goal, "directed": args.directed}
    return _report(args, "augment", digest, params, {}, results), 0


def cmd_color(args) -> tuple[dict, int]:
    g, digest = _load(args.input, args.input_format)
    wants_lowtd = args.verify in ("lowtd", "both") or args.goal == "lowtd"
    goal = "lowtd" if wants_lowtd else "centered"
    steps = args.steps if args.steps is not None else default_steps(args.p, goal)
    coloring, trace = pipeline_coloring(g, args.p, steps)
    if args.out:
        Path(args.out).write_text(coloring_to_json(coloring) + "\n", encoding="utf-8")
    verdicts = {}
    if args.verify in ("centered", "both"):
        v = verify_p_centered(g, coloring, args.p, limit=args.exhaustive_limit)
        verdicts["centered"] = {"ok": v.ok, "witness": v.witness}
    if args.verify in ("lowtd", "both"):
        v = verify_low_treedepth(g, coloring, args.p, limit=args.td_limit)
        verdicts["lowtd"] = {"ok": v.ok, "witness": _lowtd_witness(v.witness)}
    results = {
        "steps": steps,
        "palette": coloring.palette,
        "final_md": trace.final.md,
        "palette_bound": 2 * trace.final.md + 1,
        "colors": list(coloring.colors),
        "verdicts": verdicts,
    }
    params = {"p": args.p, "steps": args.steps, "verify": args.verify, "goal": goal}
    guards = {"exhaustive_limit": args.exhaustive_limit, "td_limit": args.td_limit}
    code = 0 if all(v["ok"] for v in verdicts.values()) else 1
    return _report(args, "color", digest, params, guards, results), code


def _lowtd_witness(w):
    if w is None:
        return None
    return {"classes": list(w.classes), "component": list(w.component), "treedepth": w.treedepth}


def cmd_treedepth(args) -> tuple[dict, int]:
    g, digest = _load(args.input, args.input_format)
    res = treedepth_exact(g, limit=args.limit)
    results = {"treedepth": res.value, "parent": list(res.forest.parent)}
    return _report(args, "treedepth", digest, {}, {"limit": args.limit}, results), 0


def cmd_grad(args) -> tuple[dict, int]:
    g, digest = _load(args.input, args.input_format)
    params = {"rank": args.rank, "complexity": args.complexity, "mode": args.mode, "seed": args.seed}
    guards = {"grad_limit": args.limit}
    if args.mode == "profile":
        prof = expansion_profile(g, args.rank, limit=args.limit, seed=args.seed)
        results = {"profile": prof.to_dict()}
    elif args.mode == "exact":
        if args.complexity == 1:
            value = grad_exact(g, args.rank, limit=args.limit)
        else:
            value = grad_complexity_exact(g, args.rank, args.complexity, limit=args.limit)
        results = {"value": _fraction(value), "kind": "exact"}
    else:
        if args.complexity != 1:
            raise GraphError("heuristic mode supports complexity 1 only")
        value = grad_lower_bound(g, args.rank, args.seed)
        results = {"value": _fraction(value), "kind": "lower-bound"}
    if g.n:
        results["max_density"] = _fraction(max_density(g))
    return _report(args, "grad", digest, params, guards, results), 0


def cmd_verify(args) -> tuple[dict, int]:
    g, digest = _load(args.input, args.input_format)
    coloring = coloring_from_json(Path(args.coloring).read_bytes(), n=g.n)
    if args.kind == "centered":
        v = verify_p_centered(g, coloring, args.p, limit=args.exhaustive_limit)
        witness = v.witness
    else:
        v = verify_low_treedepth(g, coloring, args.p, strict=args.strict, limit=args.td_limit)
        witness = _lowtd_witness(v.witness)
    results = {"ok": v.ok, "witness": witness, "palette": coloring.palette}
    params = {"p": args.p, "kind": args.kind, "strict": args.strict,
              "coloring_sha256": hashlib.sha256(Path(args.coloring).read_bytes()).hexdigest()}
    guards = {"exhaustive_limit": args.exhaustive_limit, "td_limit": args.td_limit}
    return _report(args, "verify", digest, params, guards, results), 0 if v.ok else 1


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bexpand", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="graph file (edge list, or DIMACS .col)")
        p.add_argument("--input-format", choices=["edge-list", "dimacs"], default=None,
                       help="override format detection by file extension")
        p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("augment", help="iterated transitive fraternal augmentation")
    common(p)
    p.add_argument("--steps", type=_non_negative)
    p.add_argument("--p", type=_positive)
    p.add_argument("--goal", choices=["centered", "lowtd"], default="centered")
    p.add_argument("--directed", action="store_true",
                   help="read 'u v' lines as arcs instead of orienting an undirected graph")
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("color", help="p-centered / low tree-depth coloring pipeline")
    common(p)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--steps", type=_non_negative)
    p.add_argument("--goal", choices=["centered", "lowtd"], default=None)
    p.add_argument("--verify", choices=["none", "centered", "lowtd", "both"], default="none")
    p.add_argument("--out", help="write the coloring JSON here")
    p.add_argument("--exhaustive-limit", type=_positive, default=EXHAUSTIVE_LIMIT)
    p.add_argument("--td-limit", type=_positive, default=TREEDEPTH_LIMIT)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("treedepth", help="exact tree-depth with a certifying forest")
    common(p)
    p.add_argument("--limit", type=_positive, default=TREEDEPTH_LIMIT)
    p.set_defaults(func=cmd_treedepth)

    p = sub.add_parser("grad", help="grad with given rank (and complexity)")
    common(p)
    p.add_argument("--rank", type=_non_negative, required=True)
    p.add_argument("--complexity", type=_positive, default=1)
    p.add_argument("--mode", choices=["exact", "heuristic", "profile"], default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=_positive, default=GRAD_LIMIT)
    p.set_defaults(func=cmd_grad)

    p = sub.add_parser("verify", help="check a coloring file")
    common(p)
    p.add_argument("--coloring", required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--kind", choices=["centered", "lowtd"], required=True)
    p.add_argument("--strict", action="store_true", help="low tree-depth over i < p classes only")
    p.add_argument("--exhaustive-limit", type=_positive, default=EXHAUSTIVE_LIMIT)
    p.add_argument("--td-limit", type=_positive, default=TREEDEPTH_LIMIT)
    p.set_defaults(func=cmd_verify)
    return parser


def _text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for section in ("parameters", "guards", "results"):
        for key, value in report.get(section, {}).items():
            if not isinstance(value, str):
                value = json.dumps(value, sort_keys=True)
            lines.append(f"{section}.{key}: {value}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        report, code = args.func(args)
    except GuardExceeded as exc:
        print(f"bexpand: guard exceeded: {exc}", file=sys.stderr)
        return 2
    except (GraphError, OSError, ValueError) as exc:
        print(f"bexpand: error: {exc}", file=sys.stderr)
        return 2
    report["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
