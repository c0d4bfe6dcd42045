"""Desk-scale site-selection study: seeded instances, scenario-based demand
satisfaction, and the four solve strategies.

Demand coefficients are sampled on a fixed micro-unit grid (10^-6) via an
inverse-CDF binary search, so instances are bit-reproducible from the seed
and all later arithmetic is exact integer work.  The four strategies differ
only in which constraint family is static and which is separated lazily;
they must all return the same optimal value.
"""

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .cuts import LinearCut
from .graphs import Graph, find_violated_cliques
from .separation import MembershipOracle
from .solver import (
    BipModel,
    CallbackSeparator,
    ImplicationRow,
    LazySeparator,
    SolveReport,
    solve,
)

MICRO = 10**6
STRATEGIES = ("NoCut", "ClqCut", "SatCut", "AllCut")

MAX_SITES = 16
MAX_SCENARIOS = 200


def beta22_micro(u: float) -> int:
    """Smallest grid point x (in micro-units) with 3x^2 - 2x^3 >= u."""
    lo, hi = 0, MICRO
    while lo < hi:
        mid = (lo + hi) // 2
        x = mid / MICRO
        if 3 * x * x - 2 * x * x * x >= u:
            hi = mid
        else:
            lo = mid + 1
    return lo


@dataclass(frozen=True)
class Instance:
    graph: Graph
    benefits: tuple[int, ...]
    epsilon: tuple[Fraction, ...]
    scenarios_a: tuple  # [j][k][pos within nbhd] supply, micro-units
    scenarios_b: tuple  # [j][k] demand, micro-units
    nbhd: tuple[tuple[int, ...], ...]  # sorted closed neighborhoods
    K: int
    seed: int

    @property
    def n(self) -> int:
        return self.graph.n

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "K": self.K,
            "graph": self.graph.to_dict(),
            "benefits": list(self.benefits),
            "epsilon": [str(e) for e in self.epsilon],
            "neighborhoods": [[v + 1 for v in nb] for nb in self.nbhd],
            "supply_micro": [[list(a) for a in per_j] for per_j in self.scenarios_a],
            "demand_micro": [list(b) for b in self.scenarios_b],
        }


def generate_instance(n: int, density: float, epsilon, K: int, seed: int,
                      max_retries: int = 1000) -> Instance:
    """Connected random graph plus seeded scenario draws.

    Draw order is fixed (edges with retries, then benefits, then per vertex
    and scenario the supply entries in neighborhood order followed by the
    demand), so one seed always produces one instance.
    """
    if not 2 <= n <= MAX_SITES:
        raise ValueError(f"site count must be in 2..{MAX_SITES}")
    if not 1 <= K <= MAX_SCENARIOS:
        raise ValueError(f"scenario count must be in 1..{MAX_SCENARIOS}")
    if not 0 < density <= 1:
        raise ValueError("density must be in (0, 1]")
    eps = Fraction(str(epsilon)) if not isinstance(epsilon, Fraction) else epsilon
    if not 0 <= eps < 1:
        raise ValueError("tolerance must be in [0, 1)")

    rng = random.Random(seed)
    graph = None
    for _ in range(max_retries):
        edges = tuple((i, j) for i in range(n) for j in range(i + 1, n)
                      if rng.random() < density)
        cand = Graph(n, edges)
        from .graphs import spanning_connected
        if cand.m and spanning_connected(cand, (1 << cand.m) - 1):
            graph = cand
            break
    if graph is None:
        raise ValueError("could not draw a connected graph at this density")

    benefits = tuple(rng.randint(-20, 20) for _ in range(n))
    nbhd = tuple(tuple(sorted(
        [j] + [u for u, v in graph.edges if v == j] +
        [v for u, v in graph.edges if u == j])) for j in range(n))

    scen_a = []
    scen_b = []
    for j in range(n):
        a_j = []
        b_j = []
        for _ in range(K):
            a_j.append(tuple(beta22_micro(rng.random()) for _ in nbhd[j]))
            b_j.append(round(rng.random() * (MICRO // 10)))
        scen_a.append(tuple(a_j))
        scen_b.append(tuple(b_j))

    return Instance(graph, benefits, tuple([eps] * n), tuple(scen_a),
                    tuple(scen_b), nbhd, K, seed)


# ---------------------------------------------------------------------------
# satisfaction machinery


def satisfaction_thresholds(inst: Instance) -> list[int]:
    """Per-vertex minimum number of satisfied scenarios."""
    return [math.ceil(inst.K * (1 - e)) for e in inst.epsilon]


def satisfaction_tables(inst: Instance) -> list[list[int]]:
    """counts[j][local_mask] = number of scenarios satisfied when exactly the
    neighborhood subset local_mask supplies vertex j."""
    tables = []
    for j in range(inst.n):
        d = len(inst.nbhd[j])
        counts = [0] * (1 << d)
        for k in range(inst.K):
            a = inst.scenarios_a[j][k]
            b = inst.scenarios_b[j][k]
            sums = [0] * (1 << d)
            for mask in range(1, 1 << d):
                low = mask & -mask
                sums[mask] = sums[mask ^ low] + a[low.bit_length() - 1]
            for mask in range(1 << d):
                if sums[mask] >= b:
                    counts[mask] += 1
        tables.append(counts)
    return tables


def satisfaction_oracle(inst: Instance) -> MembershipOracle:
    """Upper oracle: a site set is a member when every vertex sees enough
    satisfied scenarios."""
    tables = satisfaction_tables(inst)
    thresholds = satisfaction_thresholds(inst)
    projections = [tuple(v for v in nb) for nb in inst.nbhd]

    def member(mask: int) -> bool:
        for j in range(inst.n):
            local = 0
            for pos, v in enumerate(projections[j]):
                if mask >> v & 1:
                    local |= 1 << pos
            if tables[j][local] < thresholds[j]:
                return False
        return True

    return MembershipOracle(inst.n, member, "upper", name="satisfaction")


# ---------------------------------------------------------------------------
# the four strategies


@dataclass
class StrategyRun:
    strategy: str
    report: SolveReport
    sat_cuts: int
    clique_cuts: int


def _edge_cuts(inst: Instance, n_vars: int) -> list[LinearCut]:
    return [LinearCut(n_vars, 0, (1 << u) | (1 << v), 1)
            for u, v in inst.graph.edges]


def _scenario_parts(inst: Instance):
    """Big-M reformulation of the chance constraints: one indicator per
    (vertex, scenario) plus a per-vertex count row."""
    n, K = inst.n, inst.K
    rows = []
    chance = []
    thresholds = satisfaction_thresholds(inst)
    for j in range(n):
        zmask = 0
        for k in range(K):
            z = n + j * K + k
            zmask |= 1 << z
            coeffs = {v: inst.scenarios_a[j][k][pos]
                      for pos, v in enumerate(inst.nbhd[j])
                      if inst.scenarios_a[j][k][pos]}
            rows.append(ImplicationRow(z, coeffs, inst.scenarios_b[j][k]))
        chance.append(LinearCut(n + n * K, zmask, 0, thresholds[j]))
    return rows, chance


def _clique_separator(inst: Instance, n_vars: int) -> CallbackSeparator:
    site_mask = (1 << inst.n) - 1

    def fn(leaf: int) -> list[LinearCut]:
        cliques = find_violated_cliques(inst.graph, leaf & site_mask, limit=3)
        return [LinearCut(n_vars, 0, c, c.bit_count() - 1) for c in cliques]

    return CallbackSeparator(fn, name="cliques")


def build_strategy_model(inst: Instance, strategy: str) -> BipModel:
    n = inst.n
    if strategy in ("NoCut", "ClqCut"):
        n_vars = n + n * inst.K
        rows, chance = _scenario_parts(inst)
        model = BipModel(
            n_vars=n_vars,
            costs=list(inst.benefits) + [0] * (n * inst.K),
            sense="max",
            static_cuts=list(chance),
            implication_rows=rows,
        )
        if strategy == "NoCut":
            model.static_cuts.extend(_edge_cuts(inst, n_vars))
        else:
            model.separators.append(_clique_separator(inst, n_vars))
        return model
    if strategy in ("SatCut", "AllCut"):
        model = BipModel(
            n_vars=n,
            costs=list(inst.benefits),
            sense="max",
            separators=[LazySeparator(satisfaction_oracle(inst),
                                      tuple(range(n)), name="satisfaction")],
        )
        if strategy == "SatCut":
            model.static_cuts.extend(_edge_cuts(inst, n))
        else:
            model.separators.append(_clique_separator(inst, n))
        return model
    raise ValueError(f"unknown strategy {strategy!r}")


def run_strategy(inst: Instance, strategy: str,
                 node_limit: int | None = None) -> StrategyRun:
    model = build_strategy_model(inst, strategy)
    report = solve(model, node_limit=node_limit, var_limit=model.n_vars)
    sat = clique = 0
    for s in model.separators:
        if isinstance(s, LazySeparator):
            sat += s.cuts_emitted
        else:
            clique += s.cuts_emitted
    return StrategyRun(strategy, report, sat, clique)


def brute_force_value(inst: Instance):
    """(optimal value, site mask) by exhaustive scan of independent sets
    against the empirical scenario counts; (-inf, None) when infeasible."""
    tables = satisfaction_tables(inst)
    thresholds = satisfaction_thresholds(inst)
    adj = inst.graph.adjacency_masks()
    best = None
    best_mask = None
    for mask in range(1 << inst.n):
        independent = True
        probe = mask
        while probe:
            low = probe & -probe
            probe ^= low
            if adj[low.bit_length() - 1] & mask:
                independent = False
                break
        if not independent:
            continue
        ok = True
        for j in range(inst.n):
            local = 0
            for pos, v in enumerate(inst.nbhd[j]):
                if mask >> v & 1:
                    local |= 1 << pos
            if tables[j][local] < thresholds[j]:
                ok = False
                break
        if not ok:
            continue
        value = sum(r for v, r in enumerate(inst.benefits) if mask >> v & 1)
        if best is None or value > best:
            best, best_mask = value, mask
    if best is None:
        return -math.inf, None
    return best, best_mask


# ---------------------------------------------------------------------------
# campaign


def config_label(cfg: dict) -> str:
    return "n{n}_d{density}_e{epsilon}_K{K}".format(**cfg)


def run_cell(cfg: dict, seed: int, strategy: str,
             node_limit: int | None = None) -> dict:
    inst = generate_instance(cfg["n"], cfg["density"], cfg["epsilon"],
                             cfg["K"], seed)
    start = time.perf_counter()
    run = run_strategy(inst, strategy, node_limit=node_limit)
    millis = int((time.perf_counter() - start) * 1000)
    value = run.report.objective_value
    return {
        "config": config_label(cfg),
        "seed": seed,
        "strategy": strategy,
        "status": run.report.status,
        "value": str(value) if not isinstance(value, float) else
                 ("inf" if value > 0 else "-inf"),
        "nodes": run.report.nodes,
        "cuts": run.sat_cuts + run.clique_cuts,
        "millis": millis,
    }


def campaign(grid: list[dict], seeds, strategies=STRATEGIES,
             node_limit: int | None = None, workers: int = 1) -> list[dict]:
    """Run the strategy grid; absolute timings are reported for orientation
    only and are not comparable to any published figures."""
    cells = [(cfg, seed, strategy)
             for cfg in grid for seed in seeds for strategy in strategies]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_campaign_cell,
                                 [(cfg, seed, strat, node_limit)
                                  for cfg, seed, strat in cells]))
    else:
        rows = [run_cell(cfg, seed, strat, node_limit)
                for cfg, seed, strat in cells]
    return rows


def _campaign_cell(args):
    cfg, seed, strategy, node_limit = args
    return run_cell(cfg, seed, strategy, node_limit)


def agreement_groups(rows: list[dict]) -> dict:
    """Values per (config, seed) over the strategies that finished."""
    groups: dict = {}
    for row in rows:
        if row["status"] != "optimal":
            continue
        groups.setdefault((row["config"], row["seed"]), set()).add(row["value"])
    return groups
