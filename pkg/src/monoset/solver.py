"""Exact 0/1 branch-and-bound with unit propagation over rows and lazy cut
generation, plus the model builders for the covering / elimination /
bimonotone / interval / piecewise / bilinear reformulations.

There is no LP relaxation: bounding uses committed cost plus the sum of the
improving free costs, and all arithmetic is exact (ints and Fractions), so
reports carry no tolerances.  Branching is static - ascending variable
index, zero branch first - which makes reports bit-identical across runs.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import separation as sep
from .approx import Bipartition, BimonotoneSystem, is_interval
from .cuts import LinearCut
from .setsys import SetSystem, down_closure, up_closure

DEFAULT_VAR_LIMIT = 64


@dataclass
class LazySeparator:
    """Oracle-backed leaf separator over a subset of the model variables.

    ``vars`` maps oracle ground elements to model variable indices.  With a
    guard variable set, the separator only fires when the guard is 1 at the
    leaf, and every emitted row gains the (1 - guard) literal so the row is
    free whenever the guard is off.
    """

    oracle: sep.MembershipOracle
    vars: tuple[int, ...]
    guard: int | None = None
    name: str = ""
    cuts_emitted: int = 0

    def __post_init__(self):
        if len(self.vars) != self.oracle.n:
            raise ValueError("variable map does not match oracle ground size")

    def find_cuts(self, leaf: int, n_vars: int) -> list[LinearCut]:
        if self.guard is not None and not leaf >> self.guard & 1:
            return []
        point = 0
        for k, v in enumerate(self.vars):
            if leaf >> v & 1:
                point |= 1 << k
        result = sep.separate(self.oracle, point)
        if result.status == "feasible":
            return []
        pos = neg = 0
        for k, v in enumerate(self.vars):
            if result.cut.pos >> k & 1:
                pos |= 1 << v
            if result.cut.neg >> k & 1:
                neg |= 1 << v
        if self.guard is not None:
            neg |= 1 << self.guard
        self.cuts_emitted += 1
        return [LinearCut(n_vars, pos, neg, result.cut.rhs)]


@dataclass
class CallbackSeparator:
    """Leaf separator driven by a plain function returning violated rows."""

    fn: Callable[[int], list[LinearCut]]
    name: str = ""
    cuts_emitted: int = 0

    def find_cuts(self, leaf: int, n_vars: int) -> list[LinearCut]:
        found = self.fn(leaf)
        self.cuts_emitted += len(found)
        return found


@dataclass(frozen=True)
class EpigraphRow:
    """objective >= sum coeffs*x + const - big_m*(1 - selector)."""

    coeffs: dict
    const: Fraction
    selector: int | None
    big_m: Fraction


@dataclass(frozen=True)
class ImplicationRow:
    """guard = 1 forces sum coeffs*x >= rhs; coefficients must be >= 0."""

    guard: int
    coeffs: dict
    rhs: Fraction

    def __post_init__(self):
        if self.guard in self.coeffs:
            raise ValueError("guard variable cannot carry a coefficient")
        for c in self.coeffs.values():
            if c < 0:
                raise ValueError("implication rows need nonnegative coefficients")


@dataclass
class BipModel:
    n_vars: int
    costs: list
    constant: Fraction | int = 0
    sense: str = "min"
    static_cuts: list[LinearCut] = field(default_factory=list)
    separators: list = field(default_factory=list)
    selector_groups: list[tuple[int, ...]] = field(default_factory=list)
    epigraph_rows: list[EpigraphRow] = field(default_factory=list)
    implication_rows: list[ImplicationRow] = field(default_factory=list)

    def __post_init__(self):
        if self.sense not in ("min", "max"):
            raise ValueError("sense must be 'min' or 'max'")
        if self.epigraph_rows and self.sense != "min":
            raise ValueError("epigraph rows are a minimization construction")
        if len(self.costs) != self.n_vars:
            raise ValueError("cost vector length does not match n_vars")
        for cut in self.static_cuts:
            if cut.n != self.n_vars:
                raise ValueError("static cut size does not match model")
        seen = 0
        for group in self.selector_groups:
            gmask = 0
            for v in group:
                if not 0 <= v < self.n_vars:
                    raise ValueError("selector variable out of range")
                gmask |= 1 << v
            if gmask & seen:
                raise ValueError("selector groups overlap")
            seen |= gmask

    def to_dict(self) -> dict:
        return {
            "n_vars": self.n_vars,
            "sense": self.sense,
            "costs": [_num_to_json(c) for c in self.costs],
            "constant": _num_to_json(self.constant),
            "cuts": [c.to_dict() for c in self.static_cuts],
            "selector_groups": [list(g) for g in self.selector_groups],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "BipModel":
        n = int(doc["n_vars"])
        return cls(
            n_vars=n,
            costs=[_num_from_json(c) for c in doc.get("costs", [0] * n)],
            constant=_num_from_json(doc.get("constant", 0)),
            sense=doc.get("sense", "min"),
            static_cuts=[LinearCut.from_dict(c, n) for c in doc.get("cuts", [])],
            selector_groups=[tuple(g) for g in doc.get("selector_groups", [])],
        )


def _num_to_json(x):
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return int(x)


def _num_from_json(x):
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**9)
    return int(x)


@dataclass
class SolveReport:
    status: str  # "optimal" | "infeasible" | "node-limit"
    best_point: int | None
    objective_value: Fraction | int | float
    nodes: int
    cuts_added: int
    separator_calls: int

    def to_dict(self) -> dict:
        if isinstance(self.objective_value, float):
            value = "inf" if self.objective_value > 0 else "-inf"
        else:
            value = _num_to_json(self.objective_value)
        point = None
        if self.best_point is not None:
            point = [i + 1 for i in range(self.best_point.bit_length())
                     if self.best_point >> i & 1]
        return {
            "status": self.status,
            "value": value,
            "best": point,
            "nodes": self.nodes,
            "cuts_added": self.cuts_added,
            "separator_calls": self.separator_calls,
        }


class _Search:
    """One depth-first solve; owns all mutable state."""

    def __init__(self, model: BipModel, node_limit: int | None):
        self.model = model
        self.n = model.n_vars
        self.node_limit = node_limit
        self.flip = -1 if model.sense == "max" else 1
        self.costs = [self.flip * c for c in model.costs]
        self.constant = self.flip * model.constant

        self.values = [-1] * self.n
        self.ones = 0
        self.zeros = 0
        self.trail: list = []  # ("var", v) | ("row", rid, delta)
        self.committed = 0
        self.free_neg = sum(c for c in self.costs if c < 0)

        self.nodes = 0
        self.cuts_added = 0
        self.separator_calls = 0
        self.best_point: int | None = None
        self.best_value = None
        self.limited = False

        self.cut_pool: list[LinearCut] = []
        self.cut_keys: set[tuple[int, int, int]] = set()
        self.var_cuts: list[list[int]] = [[] for _ in range(self.n)]
        for cut in model.static_cuts:
            self._register_cut(cut)
        for group in model.selector_groups:
            gmask = 0
            for v in group:
                gmask |= 1 << v
            self._register_cut(LinearCut(self.n, gmask, 0, 1))
            members = sorted(group)
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    self._register_cut(LinearCut(
                        self.n, 0, (1 << members[a]) | (1 << members[b]), 1))

        self.rows = model.implication_rows
        self.row_max = [sum(r.coeffs.values()) for r in self.rows]
        self.var_rows: list[list[int]] = [[] for _ in range(self.n)]
        for rid, row in enumerate(self.rows):
            self.var_rows[row.guard].append(rid)
            for v in row.coeffs:
                if not 0 <= v < self.n:
                    raise ValueError("implication row variable out of range")
                if v != row.guard:
                    self.var_rows[v].append(rid)

        self.epi = model.epigraph_rows

    # -- cut bookkeeping -----------------------------------------------

    def _register_cut(self, cut: LinearCut) -> bool:
        key = (cut.pos, cut.neg, cut.rhs)
        if key in self.cut_keys:
            return False
        self.cut_keys.add(key)
        cid = len(self.cut_pool)
        self.cut_pool.append(cut)
        support = cut.pos | cut.neg
        while support:
            low = support & -support
            support ^= low
            self.var_cuts[low.bit_length() - 1].append(cid)
        return True

    # -- assignment / propagation ----------------------------------------

    def _assign_propagate(self, var: int, val: int) -> bool:
        queue = [(var, val)]
        while queue:
            v, x = queue.pop()
            current = self.values[v]
            if current != -1:
                if current != x:
                    return False
                continue
            self.values[v] = x
            self.trail.append(("var", v))
            bit = 1 << v
            if x:
                self.ones |= bit
                self.committed += self.costs[v]
            else:
                self.zeros |= bit
            if self.costs[v] < 0:
                self.free_neg -= self.costs[v]

            for cid in self.var_cuts[v]:
                cut = self.cut_pool[cid]
                sat = (cut.pos & self.ones).bit_count() + \
                    (cut.neg & self.zeros).bit_count()
                if sat >= cut.rhs:
                    continue
                unassigned = (cut.pos | cut.neg) & ~self.ones & ~self.zeros
                free = unassigned.bit_count()
                if sat + free < cut.rhs:
                    return False
                if sat + free == cut.rhs:
                    probe = unassigned
                    while probe:
                        low = probe & -probe
                        probe ^= low
                        u = low.bit_length() - 1
                        queue.append((u, 1 if cut.pos >> u & 1 else 0))

            for rid in self.var_rows[v]:
                row = self.rows[rid]
                if v != row.guard and x == 0 and v in row.coeffs:
                    delta = row.coeffs[v]
                    self.row_max[rid] -= delta
                    self.trail.append(("row", rid, delta))
                gval = self.values[row.guard]
                if gval == 0:
                    continue
                if self.row_max[rid] < row.rhs:
                    if gval == 1:
                        return False
                    queue.append((row.guard, 0))
        return True

    def _undo_to(self, mark: int):
        while len(self.trail) > mark:
            entry = self.trail.pop()
            if entry[0] == "var":
                v = entry[1]
                bit = 1 << v
                if self.values[v] == 1:
                    self.ones &= ~bit
                    self.committed -= self.costs[v]
                else:
                    self.zeros &= ~bit
                if self.costs[v] < 0:
                    self.free_neg += self.costs[v]
                self.values[v] = -1
            else:
                self.row_max[entry[1]] += entry[2]

    # -- bounding ---------------------------------------------------------

    def _lower_bound(self):
        bound = self.committed + self.free_neg + self.constant
        if self.epi:
            best_row = None
            for row in self.epi:
                rb = row.const
                for v, c in row.coeffs.items():
                    state = self.values[v]
                    if state == 1 or (state == -1 and c < 0):
                        rb += c
                if row.selector is not None and self.values[row.selector] != 1:
                    rb -= row.big_m
                if best_row is None or rb > best_row:
                    best_row = rb
            bound += best_row
        return bound

    def _prunable(self) -> bool:
        if self.best_value is None:
            return False
        return self._lower_bound() >= self.best_value

    # -- leaves -----------------------------------------------------------

    def _leaf_value(self):
        value = self.committed + self.constant
        if self.epi:
            best = None
            for row in self.epi:
                rv = row.const
                for v, c in row.coeffs.items():
                    if self.ones >> v & 1:
                        rv += c
                if row.selector is not None and not self.ones >> row.selector & 1:
                    rv -= row.big_m
                if best is None or rv > best:
                    best = rv
            if best is not None:
                value += best
        return value

    def _leaf(self) -> None:
        leaf = self.ones
        for cut in self.cut_pool:
            if not cut.satisfied_by(leaf):
                return  # a lazily added row already excludes this leaf
        for row in self.rows:
            if leaf >> row.guard & 1:
                total = sum(c for v, c in row.coeffs.items() if leaf >> v & 1)
                if total < row.rhs:
                    return
        new_cuts = []
        for separator in self.model.separators:
            if isinstance(separator, LazySeparator) and separator.guard is not None \
                    and not leaf >> separator.guard & 1:
                continue
            self.separator_calls += 1
            new_cuts.extend(separator.find_cuts(leaf, self.n))
        if new_cuts:
            added = 0
            for cut in new_cuts:
                if cut.n != self.n:
                    raise ValueError("separator emitted a cut of the wrong size")
                if self._register_cut(cut):
                    added += 1
            self.cuts_added += added
            if any(not c.satisfied_by(leaf) for c in new_cuts):
                return
        value = self._leaf_value()
        if self.best_value is None or value < self.best_value:
            self.best_value = value
            self.best_point = leaf

    # -- search driver ------------------------------------------------------

    def _first_unassigned(self) -> int | None:
        unset = ~(self.ones | self.zeros) & ((1 << self.n) - 1)
        if not unset:
            return None
        return (unset & -unset).bit_length() - 1

    def _try(self, frame) -> bool:
        while frame[1] < 2:
            val = frame[1]
            frame[1] += 1
            if self.node_limit is not None and self.nodes >= self.node_limit:
                self.limited = True
                return False
            self.nodes += 1
            self._undo_to(frame[2])
            if self._assign_propagate(frame[0], val) and not self._prunable():
                return True
            self._undo_to(frame[2])
        return False

    def run(self) -> SolveReport:
        stack: list[list[int]] = []
        ok = self._initial_propagate()
        if ok and not self._prunable():
            while True:
                if self.limited:
                    break
                v = self._first_unassigned()
                if v is None:
                    self._leaf()
                    descend = False
                else:
                    frame = [v, 0, len(self.trail)]
                    stack.append(frame)
                    descend = self._try(frame)
                if descend:
                    continue
                while stack:
                    frame = stack[-1]
                    self._undo_to(frame[2])
                    if not self.limited and self._try(frame):
                        break
                    stack.pop()
                else:
                    break

        if self.limited:
            status = "node-limit"
        elif self.best_value is None:
            status = "infeasible"
        else:
            status = "optimal"
        if self.best_value is None:
            value = math.inf * self.flip
            point = None
        else:
            value = self.flip * self.best_value
            point = self.best_point
        return SolveReport(status, point, value, self.nodes,
                           self.cuts_added, self.separator_calls)

    def _initial_propagate(self) -> bool:
        for cid, cut in enumerate(self.cut_pool):
            total = (cut.pos | cut.neg).bit_count()
            if total < cut.rhs:
                return False
            if total == cut.rhs:
                probe = cut.pos | cut.neg
                while probe:
                    low = probe & -probe
                    probe ^= low
                    u = low.bit_length() - 1
                    want = 1 if cut.pos >> u & 1 else 0
                    if not self._assign_propagate(u, want):
                        return False
        return True


def solve(model: BipModel, node_limit: int | None = None,
          var_limit: int = DEFAULT_VAR_LIMIT) -> SolveReport:
    """Solve a model exactly; raises if it exceeds the variable safety cap."""
    if model.n_vars > var_limit:
        raise ValueError(
            f"model has {model.n_vars} variables, above the safety cap {var_limit}")
    if model.n_vars == 0:
        value = model.constant
        return SolveReport("optimal", 0, value, 0, 0, 0)
    return _Search(model, node_limit).run()


# ---------------------------------------------------------------------------
# builders


def build_upper_model(oracle: sep.MembershipOracle, costs, sense: str = "min",
                      constant=0) -> BipModel:
    """Lazy covering model; exact over the oracle's system for any costs."""
    if oracle.shape != "upper":
        raise ValueError("builder needs an upper-shaped oracle")
    return BipModel(
        n_vars=oracle.n, costs=list(costs), constant=constant, sense=sense,
        separators=[LazySeparator(oracle, tuple(range(oracle.n)), name=oracle.name)])


def build_lower_model(oracle: sep.MembershipOracle, costs, sense: str = "min",
                      constant=0) -> BipModel:
    """Lazy elimination model; exact over the oracle's system."""
    if oracle.shape != "lower":
        raise ValueError("builder needs a lower-shaped oracle")
    return BipModel(
        n_vars=oracle.n, costs=list(costs), constant=constant, sense=sense,
        separators=[LazySeparator(oracle, tuple(range(oracle.n)), name=oracle.name)])


def build_bimonotone_model(source, costs, sense: str = "min",
                           constant=0) -> BipModel:
    """Lazy mixed-row model, exact over the bimonotone closure.

    Accepts either a bimonotone-shaped oracle or an explicit closed system
    bundled with its split.
    """
    if isinstance(source, BimonotoneSystem):
        members = source.closure.members
        oracle = sep.MembershipOracle(
            source.closure.n, lambda m: bool(members >> m & 1),
            "bimonotone", split=source.split)
    elif isinstance(source, sep.MembershipOracle):
        if source.shape != "bimonotone":
            raise ValueError("builder needs a bimonotone-shaped oracle")
        oracle = source
    else:
        raise TypeError("source must be a BimonotoneSystem or MembershipOracle")
    return BipModel(
        n_vars=oracle.n, costs=list(costs), constant=constant, sense=sense,
        separators=[LazySeparator(oracle, tuple(range(oracle.n)), name=oracle.name)])


def _component_oracles(component) -> tuple[sep.MembershipOracle, sep.MembershipOracle]:
    if isinstance(component, SetSystem):
        if not is_interval(component):
            raise ValueError("decomposition component is not an interval system")
        upb = up_closure(component).members
        downb = down_closure(component).members
        n = component.n
        return (
            sep.MembershipOracle(n, lambda m, b=upb: bool(b >> m & 1), "upper"),
            sep.MembershipOracle(n, lambda m, b=downb: bool(b >> m & 1), "lower"),
        )
    up_oracle, down_oracle = component
    if up_oracle.shape != "upper" or down_oracle.shape != "lower":
        raise ValueError("component oracles must be (upper, lower) shaped")
    if up_oracle.n != down_oracle.n:
        raise ValueError("component oracles disagree on ground size")
    return up_oracle, down_oracle


def build_interval_model(components, costs, sense: str = "min",
                         constant=0) -> BipModel:
    """Selector-guarded model for a union of interval systems.

    One binary selector per component, with an exactly-one group; covering
    rows come from the component's up-closure and elimination rows from its
    down-closure, each carrying the (1 - selector) literal.
    """
    pairs = [_component_oracles(c) for c in components]
    if not pairs:
        raise ValueError("need at least one component")
    n = pairs[0][0].n
    k = len(pairs)
    separators = []
    for idx, (up_oracle, down_oracle) in enumerate(pairs):
        if up_oracle.n != n:
            raise ValueError("components disagree on ground size")
        guard = n + idx
        base = tuple(range(n))
        separators.append(LazySeparator(up_oracle, base, guard=guard,
                                        name=f"component{idx}-cover"))
        separators.append(LazySeparator(down_oracle, base, guard=guard,
                                        name=f"component{idx}-eliminate"))
    return BipModel(
        n_vars=n + k,
        costs=list(costs) + [0] * k,
        constant=constant,
        sense=sense,
        separators=separators,
        selector_groups=[tuple(range(n, n + k))],
    )


def build_piecewise_model(regions, base, big_m=None, sense: str = "min") -> BipModel:
    """Epigraph model for a region-wise affine, sign-uniform objective.

    ``regions`` is a list of (region_system, coeffs, const) triples that must
    partition the power set; ``base`` is the feasible system (explicit, or an
    oracle that gets enumerated at this desk scale).  Increasing regions get
    covering separators on the up-closure of (base & region), decreasing ones
    elimination separators on the down-closure.
    """
    if sense != "min":
        raise ValueError("piecewise builder is a minimization construction")
    if not regions:
        raise ValueError("need at least one region")
    first = regions[0][0]
    n = first.n
    union = 0
    for system, coeffs, _ in regions:
        if system.n != n:
            raise ValueError("regions disagree on ground size")
        if union & system.members:
            raise ValueError("regions overlap")
        union |= system.members
        signs = {(-1 if c < 0 else (1 if c > 0 else 0)) for c in coeffs}
        if 1 in signs and -1 in signs:
            raise ValueError("region cost vector mixes signs")
    if union != (1 << (1 << n)) - 1:
        raise ValueError("regions do not partition the power set")

    if isinstance(base, sep.MembershipOracle):
        if base.n != n:
            raise ValueError("base oracle ground size mismatch")
        bitmap = 0
        for mask in range(1 << n):
            if base(mask):
                bitmap |= 1 << mask
        base_system = SetSystem(first.ground, bitmap)
    else:
        base_system = base

    if big_m is None:
        big_m = 1 + sum(
            sum(abs(Fraction(c)) for c in coeffs) + abs(Fraction(const))
            for _, coeffs, const in regions)
    big_m = Fraction(big_m)

    k = len(regions)
    separators = []
    epi_rows = []
    for idx, (system, coeffs, const) in enumerate(regions):
        guard = n + idx
        piece = base_system & system
        increasing = all(c >= 0 for c in coeffs)
        if increasing:
            bmp = up_closure(piece).members
            oracle = sep.MembershipOracle(n, lambda m, b=bmp: bool(b >> m & 1), "upper")
        else:
            bmp = down_closure(piece).members
            oracle = sep.MembershipOracle(n, lambda m, b=bmp: bool(b >> m & 1), "lower")
        separators.append(LazySeparator(oracle, tuple(range(n)), guard=guard,
                                        name=f"region{idx}"))
        epi_rows.append(EpigraphRow(
            coeffs={v: Fraction(c) for v, c in enumerate(coeffs) if c},
            const=Fraction(const), selector=guard, big_m=big_m))

    return BipModel(
        n_vars=n + k,
        costs=[0] * (n + k),
        sense="min",
        separators=separators,
        selector_groups=[tuple(range(n, n + k))],
        epigraph_rows=epi_rows,
    )


# ---------------------------------------------------------------------------
# bilinear schemes


def solve_bilinear_constrained(R, alpha, costs_x, costs_y, extra_cuts=(),
                               sense: str = "min",
                               node_limit: int | None = None) -> SolveReport:
    """Pick rows and columns meeting a submatrix-sum level at minimum cost."""
    oracle = sep.bilinear_constraint_oracle(R, alpha)
    model = build_upper_model(oracle, list(costs_x) + list(costs_y), sense=sense)
    model.static_cuts.extend(extra_cuts)
    return solve(model, node_limit=node_limit)


def solve_bilinear_objective(R, feasibility_oracle: sep.MembershipOracle,
                             epsilon=None,
                             node_limit: int | None = None) -> SolveReport:
    """Minimize the selected submatrix entry-sum over a feasible region.

    Incumbent-driven loop: each master solve uses the surrogate row/column
    margins as its objective; every incumbent tightens a level threshold and
    contributes elimination rows that exclude all structures whose entry-sum
    exceeds it.  Terminates when the master goes infeasible; with integral
    entries and epsilon = 1 the incumbent is exactly optimal, otherwise it
    is epsilon-optimal.
    """
    n = len(R)
    m = len(R[0]) if n else 0
    for row in R:
        for value in row:
            if value < 0:
                raise ValueError("negative entries break monotonicity")
    if feasibility_oracle.n != n + m:
        raise ValueError("feasibility oracle must cover rows then columns")
    integral = all(
        isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1)
        for row in R for v in row)
    if epsilon is None:
        epsilon = 1 if integral else Fraction(1, 10**6)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")

    def bilinear_value(mask: int):
        total = 0
        for i in range(n):
            if mask >> i & 1:
                for j in range(m):
                    if mask >> (n + j) & 1:
                        total += R[i][j]
        return total

    surrogate = [sum(R[i]) for i in range(n)] + \
        [sum(R[i][j] for i in range(n)) for j in range(m)]

    level_cuts: list[LinearCut] = []
    best_value = None
    best_point = None
    total_nodes = 0
    total_cuts = 0
    total_sep = 0
    while True:
        master = BipModel(
            n_vars=n + m, costs=list(surrogate), sense="min",
            static_cuts=list(level_cuts),
            separators=[LazySeparator(feasibility_oracle,
                                      tuple(range(n + m)), name="feasibility")])
        report = solve(master, node_limit=node_limit)
        total_nodes += report.nodes
        total_cuts += report.cuts_added
        total_sep += report.separator_calls
        if report.status == "node-limit":
            status = "node-limit"
            break
        if report.status == "infeasible":
            status = "optimal" if best_value is not None else "infeasible"
            break
        point = report.best_point
        value = bilinear_value(point)
        if best_value is None or value < best_value:
            best_value, best_point = value, point
        threshold = best_value - epsilon

        def level_member(mask: int, t=threshold):
            return bilinear_value(mask) <= t

        level_oracle = sep.MembershipOracle(n + m, level_member, "lower",
                                            name="level-set")
        witness = sep.shrink_minimal_infeasible(level_oracle, point)
        cut = LinearCut(n + m, 0, witness, 1)
        level_cuts.append(cut)
        total_cuts += 1

    if best_value is None:
        value = math.inf
    else:
        value = best_value
    return SolveReport(status, best_point, value, total_nodes,
                       total_cuts, total_sep)
