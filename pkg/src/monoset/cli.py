"""Command-line surface: operator pipelines, approximation reports, the
structural-correspondence demos, solving, and the case-study campaign.

Human-readable tables go to stdout; machine output (JSON / CSV) goes to
files.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

import argparse
import csv
import json
import sys

from . import approx, casestudy, cuts, graphs, separation, setsys, solver


class UsageError(ValueError):
    """Bad flag values; maps to exit code 2."""


FIXTURES = {
    "triangle": (graphs.triangle_graph, (0, 2)),
    "p3": (lambda: graphs.path_graph(3), (0, 2)),
    "c4": (lambda: graphs.cycle_graph(4), (0, 2)),
    "c5": (lambda: graphs.cycle_graph(5), (0, 2)),
    "k4": (lambda: graphs.complete_graph(4), (0, 3)),
    "k13": (lambda: graphs.star_graph(3), (1, 2)),
}

PIPELINE_OPS = {
    "up": setsys.up_closure,
    "down": setsys.down_closure,
    "min": setsys.minimal,
    "max": setsys.maximal,
    "comp": setsys.complement,
    "ecomp": setsys.element_complement,
    "cut": setsys.cut,
    "cocut": setsys.cocut,
}


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _write_json(path: str, doc: dict):
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _format_system(s: setsys.SetSystem) -> str:
    members = " ".join(
        "{" + ",".join(map(str, ids)) + "}" for ids in s.member_sets())
    return f"n={s.n} |members|={len(s)}: {members if members else '(none)'}"


def _format_family(masks) -> str:
    parts = []
    for m in sorted(masks):
        parts.append("{" + ",".join(map(str, setsys.subset_to_indices(m))) + "}")
    return " ".join(parts) if parts else "(none)"


def _parse_indices(text: str, n: int) -> int:
    if not text:
        return 0
    try:
        ids = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad index list {text!r}") from exc
    if any(not 1 <= i <= n for i in ids):
        raise UsageError(f"index list {text!r} outside 1..{n}")
    return setsys.subset_from_indices(ids, n)


# ---------------------------------------------------------------------------
# ops


def cmd_ops(args) -> int:
    system = setsys.SetSystem.from_dict(_load_json(args.system))
    for token in args.pipeline.split():
        if token.startswith("flip:"):
            mask = _parse_indices(token[len("flip:"):], system.n)
            system = setsys.apply_flip(
                setsys.FlipMask(system.ground, mask), system)
        elif token in PIPELINE_OPS:
            system = PIPELINE_OPS[token](system)
        else:
            raise UsageError(f"unknown pipeline step {token!r}")
    print(_format_system(system))
    if args.output:
        _write_json(args.output, system.to_dict())
    return 0


# ---------------------------------------------------------------------------
# approx


def cmd_approx(args) -> int:
    system = setsys.SetSystem.from_dict(_load_json(args.system))
    if args.mode == "upper":
        inner, outer = approx.upper_approx(system)
        exact = inner.members == system.members == outer.members
        doc = {"mode": "upper", "inner": inner.to_dict(),
               "outer": outer.to_dict(), "exact": exact}
        print(f"upper inner: {_format_system(inner)}")
        print(f"upper outer: {_format_system(outer)}")
        print(f"exact: {exact}")
    elif args.mode == "lower":
        inner, outer = approx.lower_approx(system)
        exact = inner.members == system.members == outer.members
        doc = {"mode": "lower", "inner": inner.to_dict(),
               "outer": outer.to_dict(), "exact": exact}
        print(f"lower inner: {_format_system(inner)}")
        print(f"lower outer: {_format_system(outer)}")
        print(f"exact: {exact}")
    elif args.mode == "interval":
        closure = approx.interval_closure(system)
        exact = closure.members == system.members
        doc = {"mode": "interval", "closure": closure.to_dict(), "exact": exact}
        print(f"interval closure: {_format_system(closure)}")
        print(f"already interval: {exact}")
    else:  # bimonotone
        if args.split is None:
            raise UsageError("--mode bimonotone needs --split")
        part_i = _parse_indices(args.split, system.n)
        split = approx.Bipartition.from_part_i(system.n, part_i)
        b = approx.bimonotone_closure(system, split)
        exact = b.closure.members == system.members
        doc = {"mode": "bimonotone", "split": setsys.subset_to_indices(part_i),
               "closure": b.closure.to_dict(),
               "extremals": b.extremals.to_dict(), "exact": exact}
        print(f"closure:   {_format_system(b.closure)}")
        print(f"extremals: {_format_system(b.extremals)}")
        print(f"already closed: {exact}")
    if args.output:
        _write_json(args.output, doc)
    return 0


# ---------------------------------------------------------------------------
# demos


def _demo_graph(args) -> tuple[graphs.Graph, int, int]:
    if args.graph:
        g = graphs.Graph.from_dict(_load_json(args.graph))
        s = (args.source - 1) if args.source else 0
        t = (args.target - 1) if args.target else g.n - 1
    else:
        builder, (s, t) = FIXTURES[args.fixture]
        g = builder()
        if args.source:
            s = args.source - 1
        if args.target:
            t = args.target - 1
    if not (0 <= s < g.n and 0 <= t < g.n) or s == t:
        raise UsageError("bad source/target vertices")
    return g, s, t


def _print_demo(title: str, feasible: str, computed, independent) -> bool:
    equal = sorted(computed) == sorted(independent)
    print(title)
    print(f"  feasible system:     {feasible}")
    print(f"  computed family:     {_format_family(computed)}")
    print(f"  independent family:  {_format_family(independent)}")
    print(f"  verdict: {'EQUAL' if equal else 'DIFFER'}")
    return equal


def demo_shortest_path(g: graphs.Graph, s: int, t: int) -> bool:
    paths = graphs.system_st_paths(g, s, t)
    computed = list(graphs.structural_counterpart(paths, "min").masks())
    independent = graphs.enumerate_min_st_edge_cuts(g, s, t)
    return _print_demo(
        f"shortest-path demo (s={s + 1}, t={t + 1}): index family = minimal s-t edge cuts",
        _format_system(paths), computed, independent)


def demo_max_cut(g: graphs.Graph) -> bool:
    cuts_system = graphs.system_edge_cuts(g)
    computed = list(graphs.structural_counterpart(cuts_system, "max").masks())
    independent = graphs.enumerate_odd_cycles(g)
    return _print_demo(
        "max-cut demo: index family = odd simple cycles",
        _format_system(cuts_system), computed, independent)


def demo_dominating(g: graphs.Graph) -> bool:
    oracle = graphs.system_dominating(g)
    system = setsys.SetSystem.from_masks(
        g.n, [m for m in range(1 << g.n) if oracle(m)])
    computed = list(graphs.structural_counterpart(system, "min").masks())
    independent = graphs.enumerate_min_closed_neighborhoods(g)
    return _print_demo(
        "dominating-set demo: index family = minimal closed neighborhoods",
        f"dominating sets over n={g.n} ({len(system)} members)",
        computed, independent)


def demo_spanning(g: graphs.Graph) -> bool:
    trees = setsys.SetSystem.from_masks(
        g.m, [m for m in range(1 << g.m)
              if graphs.spanning_connected(g, m) and graphs.is_forest(g, m)])
    computed_min = list(graphs.structural_counterpart(trees, "min").masks())
    independent_min = graphs.enumerate_min_global_cuts(g)
    ok_min = _print_demo(
        "spanning demo (minimization): index family = global edge cuts",
        f"spanning trees ({len(trees)} members)", computed_min, independent_min)
    computed_max = list(graphs.structural_counterpart(trees, "max").masks())
    independent_max = graphs.enumerate_simple_cycles(g)
    ok_max = _print_demo(
        "spanning demo (maximization): index family = simple cycles",
        f"spanning trees ({len(trees)} members)", computed_max, independent_max)
    return ok_min and ok_max


def demo_signed_mincut(g: graphs.Graph) -> bool:
    weights = g.weights if g.weights is not None else \
        tuple(1 if i == 0 else -2 for i in range(g.m))
    part_i = 0
    for idx, w in enumerate(weights):
        if w >= 0:
            part_i |= 1 << idx
    split = approx.Bipartition.from_part_i(g.m, part_i)
    brute = graphs.signed_mincut_closure_brute(g, split)
    mismatch = [t for t in range(1 << g.m)
                if graphs.signed_mincut_membership(g, split, t) != brute.contains(t)]
    oracle = graphs.signed_mincut_oracle(g, split)
    model = solver.build_bimonotone_model(oracle, list(weights), sense="min")
    report = solver.solve(model)
    best_brute = min(
        sum(w for i, w in enumerate(weights) if cut_mask >> i & 1)
        for cut_mask in graphs.system_edge_cuts(g).masks())
    equal = not mismatch and report.objective_value == best_brute
    print("signed-mincut demo: contraction oracle vs explicit closure")
    print(f"  weights: {list(weights)}  nonnegative part: "
          f"{setsys.subset_to_indices(part_i)}")
    print(f"  membership mismatches: {len(mismatch)}")
    print(f"  optimum via mixed rows: {report.objective_value}   "
          f"brute force: {best_brute}")
    print(f"  verdict: {'EQUAL' if equal else 'DIFFER'}")
    return equal


def demo_bilinear() -> bool:
    R = [[1, 0], [0, 1]]
    alpha = 1
    oracle = separation.bilinear_constraint_oracle(R, alpha)
    explicit = setsys.SetSystem.from_masks(
        4, [m for m in range(16) if oracle.predicate(m)])
    computed = sorted(cuts.covering_index_family(explicit).masks())
    independent = sorted(
        (15 & ~m) for m in setsys.maximal(setsys.complement(explicit)).masks())
    report = solver.solve_bilinear_constrained(R, alpha, [1, 1], [1, 1])
    equal = computed == independent and report.objective_value == 2
    print("bilinear demo: 2x2 identity, level 1")
    print(f"  covering index family:   {_format_family(computed)}")
    print(f"  complemented maximal non-members: {_format_family(independent)}")
    print(f"  optimum (unit costs): {report.objective_value}  expected 2")
    print(f"  verdict: {'EQUAL' if equal else 'DIFFER'}")
    return equal


def cmd_demo(args) -> int:
    if args.name == "bilinear":
        ok = demo_bilinear()
    else:
        g, s, t = _demo_graph(args)
        if args.name == "shortest-path":
            ok = demo_shortest_path(g, s, t)
        elif args.name == "max-cut":
            ok = demo_max_cut(g)
        elif args.name == "dominating":
            ok = demo_dominating(g)
        elif args.name == "spanning":
            ok = demo_spanning(g)
        else:  # signed-mincut
            ok = demo_signed_mincut(g)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# solve


def _problem_model(args) -> solver.BipModel:
    g, s, t = _demo_graph(args)
    edge_costs = list(g.weights) if g.weights is not None else [1] * g.m
    if args.problem == "dominating":
        costs = list(g.vertex_weights) if g.vertex_weights is not None else [1] * g.n
        return solver.build_upper_model(graphs.system_dominating(g), costs)
    if args.problem == "shortest-path":
        return solver.build_upper_model(
            graphs.system_st_connected(g, s, t), edge_costs)
    if args.problem == "max-cut":
        return solver.build_lower_model(
            graphs.system_bipartite_subgraphs(g), edge_costs, sense="max")
    if args.problem == "spanning-min":
        return solver.build_upper_model(
            graphs.system_spanning_connected(g), edge_costs)
    return solver.build_lower_model(
        graphs.system_forests(g), edge_costs, sense="max")


def cmd_solve(args) -> int:
    if bool(args.model) == bool(args.problem):
        raise UsageError("give exactly one of MODEL.json or --problem")
    if args.model:
        model = solver.BipModel.from_dict(_load_json(args.model))
    else:
        model = _problem_model(args)
    report = solver.solve(model, node_limit=args.node_limit)
    doc = report.to_dict()
    print(f"status: {doc['status']}  value: {doc['value']}")
    print(f"point: {doc['best']}")
    print(f"nodes: {doc['nodes']}  cuts added: {doc['cuts_added']}  "
          f"separator calls: {doc['separator_calls']}")
    if args.output:
        _write_json(args.output, doc)
    return 0


# ---------------------------------------------------------------------------
# casestudy


def cmd_casestudy(args) -> int:
    if not 0 < args.density <= 1:
        raise UsageError("--density must be in (0, 1]")
    if not 0 <= args.eps < 1:
        raise UsageError("--eps must be in [0, 1)")
    try:
        seeds = [int(tok) for tok in args.seeds.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad seed list {args.seeds!r}") from exc
    strategies = tuple(args.strategies.split(","))
    for strat in strategies:
        if strat not in casestudy.STRATEGIES:
            raise UsageError(f"unknown strategy {strat!r}")
    grid = [{"n": args.n, "density": args.density,
             "epsilon": args.eps, "K": args.k}]
    rows = casestudy.campaign(grid, seeds, strategies,
                              node_limit=args.node_limit, workers=args.workers)
    header = ["config", "seed", "strategy", "status", "value",
              "nodes", "cuts", "millis"]
    widths = [max(len(h), 10) for h in header]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(str(row[h]).ljust(w) for h, w in zip(header, widths)))
    groups = casestudy.agreement_groups(rows)
    disagree = {key: vals for key, vals in groups.items() if len(vals) > 1}
    print(f"value agreement: {'OK' if not disagree else f'MISMATCH {disagree}'}")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=header)
            writer.writeheader()
            writer.writerows(rows)
    return 0 if not disagree else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoset",
        description="set-system operators, monotone approximations, cut "
                    "generation, and the site-selection study")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ops = sub.add_parser("ops", help="apply an operator pipeline to a system")
    p_ops.add_argument("system", help="system JSON file")
    p_ops.add_argument("pipeline",
                       help="space-separated steps: up down min max comp "
                            "ecomp cut cocut flip:i,j,...")
    p_ops.add_argument("-o", "--output", help="write result JSON here")
    p_ops.set_defaults(func=cmd_ops)

    p_approx = sub.add_parser("approx", help="monotone approximation report")
    p_approx.add_argument("system")
    p_approx.add_argument("--mode", required=True,
                          choices=["upper", "lower", "interval", "bimonotone"])
    p_approx.add_argument("--split", help="1-based indices of the increasing part")
    p_approx.add_argument("-o", "--output")
    p_approx.set_defaults(func=cmd_approx)

    p_demo = sub.add_parser("demo", help="structural correspondence demos")
    p_demo.add_argument("name", choices=["shortest-path", "max-cut", "dominating",
                                         "spanning", "signed-mincut", "bilinear"])
    p_demo.add_argument("--fixture", default="triangle", choices=sorted(FIXTURES))
    p_demo.add_argument("--graph", help="graph JSON file (overrides --fixture)")
    p_demo.add_argument("--source", type=int, help="1-based source vertex")
    p_demo.add_argument("--target", type=int, help="1-based target vertex")
    p_demo.set_defaults(func=cmd_demo)

    p_solve = sub.add_parser("solve", help="solve a model file or a named problem")
    p_solve.add_argument("model", nargs="?", help="model JSON file")
    p_solve.add_argument("--problem",
                         choices=["dominating", "shortest-path", "max-cut",
                                  "spanning-min", "spanning-max"])
    p_solve.add_argument("--fixture", default="triangle", choices=sorted(FIXTURES))
    p_solve.add_argument("--graph")
    p_solve.add_argument("--source", type=int)
    p_solve.add_argument("--target", type=int)
    p_solve.add_argument("--node-limit", type=int)
    p_solve.add_argument("-o", "--output")
    p_solve.set_defaults(func=cmd_solve)

    p_case = sub.add_parser("casestudy", help="run the site-selection strategies")
    p_case.add_argument("--n", type=int, required=True)
    p_case.add_argument("--density", type=float, required=True)
    p_case.add_argument("--eps", type=float, required=True)
    p_case.add_argument("--k", type=int, required=True)
    p_case.add_argument("--seeds", default="1")
    p_case.add_argument("--strategies", default=",".join(casestudy.STRATEGIES))
    p_case.add_argument("--node-limit", type=int)
    p_case.add_argument("--workers", type=int, default=1)
    p_case.add_argument("--out", help="write the CSV report here")
    p_case.set_defaults(func=cmd_casestudy)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
