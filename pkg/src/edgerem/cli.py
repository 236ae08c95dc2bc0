"""Command-line front end. Results go to stdout as JSON, diagnostics to stderr.

Exit status: 0 on success, 1 when a budget or search limit was exceeded,
2 on usage, input or format errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .extremal import (
    EnumerationTooLarge,
    candidate_trees,
    es_bound,
    verify_sesc,
)
from .factor import max_degree_constrained_subgraph
from .formats import GraphFormatError, guess_format, parse_graph, to_graph6
from .generate import generate_graphs
from .graph import Graph, star_forest
from .matching import is_matching, max_matching
from .oracle import BudgetExceeded, SearchLimitExceeded, rem_exact
from .reductions import (
    ReductionError,
    contains_balanced_biclique,
    disjoint_pad,
    has_clique_factor,
    pendant_expand,
)
from .starforest import EnumerationLimitExceeded, ex_star_forest
from .structure import NotATree, NotStarForest, is_star_forest
from .subgraph import contains_subgraph

EXPONENTIAL_EDGE_THRESHOLD = 40


class UsageError(Exception):
    pass


class Exceeded(Exception):
    pass


def _sniff(text: str) -> str:
    s = text.lstrip()
    return "edge-list" if s[:1].isdigit() else "graph6"


def load_graph(spec: str, fmt: str | None) -> Graph:
    try:
        if spec == "-":
            text = sys.stdin.read()
            return parse_graph(text, fmt or _sniff(text))
        text = Path(spec).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {spec}: {exc}") from None
    if fmt is None:
        suffix = Path(spec).suffix.lower()
        fmt = guess_format(spec) if suffix in (".g6", ".graph6", ".txt", ".el", ".edges") else _sniff(text)
    return parse_graph(text, fmt)


def fingerprint(g: Graph) -> dict:
    g6 = to_graph6(g)
    return {"graph6": g6, "sha256": hashlib.sha256(g6.encode()).hexdigest()[:16],
            "n": g.n, "m": g.m}


def load_budget(path: str, g: Graph) -> dict[int, int]:
    budget = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise UsageError(f"{path}:{lineno}: expected 'vertex value'")
        try:
            v, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise UsageError(f"{path}:{lineno}: expected two integers") from None
        if not 0 <= v < g.n:
            raise UsageError(f"{path}:{lineno}: vertex {v} out of range")
        if val < 0:
            raise UsageError(f"{path}:{lineno}: negative budget {val}")
        budget[v] = val
    return budget


# -- commands -------------------------------------------------------------

def _choose_method(args, h: Graph) -> str:
    method = args.method
    star = is_star_forest(h)
    if method == "auto":
        method = "starforest" if star else "oracle"
        if not star:
            print("warning: pattern is not a star forest; using exponential-time exact search",
                  file=sys.stderr)
    if method == "starforest" and not star:
        raise UsageError("--method starforest needs a star-forest pattern")
    return method


def _deletion(args) -> tuple[dict, dict, str, dict]:
    g = load_graph(args.graph, args.format)
    h = load_graph(args.pattern, args.format)
    method = _choose_method(args, h)
    inputs = {"graph": fingerprint(g), "pattern": fingerprint(h)}
    if method == "starforest":
        res = ex_star_forest(g, h)
        witness = res.witness
        ex = res.ex
        if args.budget is not None and g.m - ex > args.budget:
            raise Exceeded(f"rem = {g.m - ex} exceeds budget {args.budget}")
        kept = set(witness.edges())
        deleted = [e for e in g.edges() if e not in kept]
        counters = {"candidates": res.candidates}
        extra = {"branch_trace": res.trace}
    else:
        if (g.m > EXPONENTIAL_EDGE_THRESHOLD and args.budget is None
                and not args.yes_exponential):
            raise UsageError(
                f"graph has {g.m} edges; pass --budget or --yes-exponential to run the "
                "exponential-time search"
            )
        res = rem_exact(g, h, budget=args.budget)
        witness, ex, deleted = res.witness, res.ex, list(res.deleted_edges)
        counters = {"nodes": res.nodes}
        extra = {}
    if contains_subgraph(witness, h) is not None or witness.m != ex:
        raise AssertionError("witness failed re-validation")
    result = {"rem": g.m - ex, "ex": ex, "deleted_edges": [list(e) for e in deleted],
              "witness_graph6": to_graph6(witness), **extra}
    return inputs, result, method, counters


def cmd_rem(args):
    return _deletion(args)


cmd_ex = cmd_rem


def cmd_matching(args):
    g = load_graph(args.graph, args.format)
    m = max_matching(g)
    if not is_matching(g, m):
        raise AssertionError("matching failed re-validation")
    return {"graph": fingerprint(g)}, {"size": len(m), "edges": [list(e) for e in m]}, "matching", {}


def cmd_factor(args):
    g = load_graph(args.graph, args.format)
    if (args.f is None) == (args.f_const is None):
        raise UsageError("give exactly one of --f FILE or --f-const K")
    budget = args.f_const if args.f is None else load_budget(args.f, g)
    res = max_degree_constrained_subgraph(g, budget)
    result = {"m": res.m, "edges": [list(e) for e in res.edges], "budget": list(res.budget),
              "gadget_matching": res.matching_size, "slack": res.total_slack,
              "identity_holds": res.matching_size == res.m + res.total_slack}
    return {"graph": fingerprint(g)}, result, "factor", {}


def cmd_reduce(args):
    g = load_graph(args.graph, args.format)
    if args.kind == "pendant":
        if args.tree is None:
            raise UsageError("reduce pendant needs --tree")
        other = load_graph(args.tree, args.format)
        inst = pendant_expand(g, other)
    else:
        if args.pattern is None:
            raise UsageError("reduce pad needs --pattern")
        other = load_graph(args.pattern, args.format)
        inst = disjoint_pad(g, other)
    result = {"kind": inst.kind, "built_graph6": to_graph6(inst.built),
              "built_n": inst.built.n, "built_m": inst.built.m}
    if inst.kind == "pendant":
        result["leaves_per_vertex"] = inst.params["leaves_per_vertex"]
        result["core_graph6"] = to_graph6(inst.params["core"])
    else:
        result["k"] = inst.params["k"]
        result["T1_graph6"] = to_graph6(inst.params["T1"])
        result["copies_each"] = inst.params["copies_each"]
    if args.validate:
        report = inst.validate()
        result["assertion"] = report
    inputs = {"graph": fingerprint(g), "other": fingerprint(other)}
    return inputs, result, "reduce", {}


def cmd_check(args):
    g = load_graph(args.graph, args.format)
    if args.what == "biclique":
        result = {"contains_balanced_biclique": contains_balanced_biclique(g)}
    else:
        if args.q is None:
            raise UsageError("check clique-factor needs --q")
        try:
            result = {"has_clique_factor": has_clique_factor(g, args.q), "q": args.q}
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return {"graph": fingerprint(g)}, result, "check", {}


def cmd_verify_sesc(args):
    t = load_graph(args.tree, args.format)
    verdict = verify_sesc(t, args.n, jobs=args.jobs, max_n=args.max_n)
    result = {"verdict": verdict.verdict, "n": args.n, "k": t.n,
              "edge_bound": str(es_bound(t, args.n)),
              "counterexamples": list(verdict.counterexamples),
              "extremal": list(verdict.extremal)}
    return {"tree": fingerprint(t)}, result, "verify-sesc", {"t_free_graphs": verdict.t_free_count}


def cmd_gen_trees(args):
    specs = candidate_trees(args.k, args.max_diameter, args.non_star)
    trees = [{"graph6": to_graph6(s.tree), "diameter": s.diameter, "star": s.is_star,
              "gammas": list(s.gammas)} for s in specs]
    return {}, {"k": args.k, "count": len(trees), "trees": trees}, "gen-trees", {}


def cmd_bench(args):
    patterns = []
    for t in [(1,), (2,), (3,), (4,), (1, 1), (2, 1)]:
        for iso in range(6):
            h = star_forest(*t, isolated=iso)
            if h.n <= args.max_pattern:
                patterns.append(h)
    graphs = [g for n in range(1, args.max_n + 1) for g in generate_graphs(n)]
    mismatches = []
    times = {"starforest": 0.0, "oracle": 0.0}
    for h in patterns:
        for g in graphs:
            t0 = time.perf_counter()
            a = ex_star_forest(g, h).ex
            t1 = time.perf_counter()
            b = rem_exact(g, h).ex
            t2 = time.perf_counter()
            times["starforest"] += t1 - t0
            times["oracle"] += t2 - t1
            if a != b:
                mismatches.append({"graph": to_graph6(g), "pattern": to_graph6(h),
                                   "starforest": a, "oracle": b})
    result = {"graphs": len(graphs), "patterns": len(patterns),
              "instances": len(graphs) * len(patterns), "mismatches": mismatches,
              "seconds": {k: round(v, 3) for k, v in times.items()}}
    return {}, result, "bench", {}


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgerem", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["graph6", "edge-list"],
                        help="input format (default: by extension, else sniffed)")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn in (("rem", cmd_rem), ("ex", cmd_ex)):
        p = sub.add_parser(name, help=f"compute {name}_H(G)")
        p.add_argument("--graph", required=True)
        p.add_argument("--pattern", required=True)
        p.add_argument("--budget", type=int)
        p.add_argument("--method", choices=["auto", "oracle", "starforest"], default="auto")
        p.add_argument("--yes-exponential", action="store_true",
                       help="allow the exponential search on large inputs without a budget")
        p.set_defaults(func=fn)

    p = sub.add_parser("matching", help="maximum matching")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_matching)

    p = sub.add_parser("factor", help="maximum subgraph under degree caps")
    p.add_argument("--graph", required=True)
    p.add_argument("--f", help="file of 'vertex value' lines; unlisted vertices are uncapped")
    p.add_argument("--f-const", type=int)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("reduce", help="build a reduction instance")
    p.add_argument("kind", choices=["pendant", "pad"])
    p.add_argument("--graph", required=True)
    p.add_argument("--tree")
    p.add_argument("--pattern")
    p.add_argument("--validate", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("check", help="polynomial decision procedures")
    p.add_argument("what", choices=["biclique", "clique-factor"])
    p.add_argument("--graph", required=True)
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify-sesc", help="exhaustive strong Erdős–Sós check")
    p.add_argument("--tree", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_verify_sesc)

    p = sub.add_parser("gen-trees", help="list trees on k vertices")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-diameter", type=int, default=None)
    p.add_argument("--non-star", action="store_true")
    p.set_defaults(func=cmd_gen_trees)

    p = sub.add_parser("bench", help="star-forest solver vs oracle on all small graphs")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-pattern", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        inputs, result, method, counters = args.func(args)
    except (UsageError, GraphFormatError, NotATree, NotStarForest, ReductionError,
            EnumerationTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceeded, SearchLimitExceeded, EnumerationLimitExceeded, Exceeded) as exc:
        print(f"exceeded: {exc}", file=sys.stderr)
        return 1
    report = {
        "command": args.command,
        "argv": list(sys.argv[1:] if argv is None else argv),
        "inputs": inputs,
        "method": method,
        "result": result,
        "counters": counters,
        "wall_time": round(time.perf_counter() - start, 6),
    }
    json.dump(report, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
