"""Membership oracles for large set systems and extremal-witness separation.

An oracle is a predicate over element masks plus a declared monotone shape.
Separation turns an infeasible query point into an extremal infeasible
structure (maximal non-member for upper systems, minimal for lower ones,
mixed order for bimonotone ones) and emits the matching violated row.  The
fast path is a chain binary search; a greedy completion pass afterwards
guarantees true extremality at a worst-case extra n calls.
"""

import threading
from dataclasses import dataclass, field
from typing import Callable

from .approx import Bipartition, is_interval
from .cuts import LinearCut
from .setsys import SetSystem, monotone_shape, validate_subset


class UnsupportedShapeError(ValueError):
    """Raised when separation is asked for a shape it cannot handle."""


class MembershipOracle:
    """Predicate over subsets with declared monotonicity metadata.

    The predicate must be pure; the call counter is the only mutable state
    and uses a lock so oracles stay safe under concurrent callers.
    """

    SHAPES = ("upper", "lower", "bimonotone", "interval", "general")

    def __init__(self, n: int, predicate: Callable[[int], bool], shape: str,
                 split: Bipartition | None = None, name: str = ""):
        if shape not in self.SHAPES:
            raise ValueError(f"unknown shape {shape!r}")
        if shape == "bimonotone":
            if split is None:
                raise ValueError("bimonotone oracles need a bipartition")
            if split.ground.n != n:
                raise ValueError("bipartition size does not match oracle")
        self.n = n
        self.predicate = predicate
        self.shape = shape
        self.split = split
        self.name = name
        self._calls = 0
        self._lock = threading.Lock()

    @property
    def calls(self) -> int:
        return self._calls

    def __call__(self, mask: int) -> bool:
        validate_subset(mask, self.n)
        with self._lock:
            self._calls += 1
        return bool(self.predicate(mask))


@dataclass
class SeparationResult:
    status: str  # "feasible" | "cut-found"
    cut: LinearCut | None
    witness: int | None
    oracle_calls: int


@dataclass
class ShapeAuditReport:
    trials: int
    violations: list[tuple[int, int, str]] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.violations


def explicit_oracle(s: SetSystem) -> MembershipOracle:
    """Wrap an explicit system; the declared shape comes from classification."""
    shape = monotone_shape(s)
    if shape == "both":
        shape = "upper"
    elif shape == "neither":
        shape = "interval" if is_interval(s) else "general"
    members = s.members
    return MembershipOracle(s.n, lambda m: bool(members >> m & 1), shape)


def _grow_unchecked(oracle: MembershipOracle, seed: int) -> int:
    missing = [i for i in range(oracle.n) if not seed >> i & 1]

    # chain binary search: largest prefix of missing elements whose union
    # with the seed is still infeasible
    lo, hi = 0, len(missing)  # invariant: prefix lo stays infeasible
    while lo < hi:
        mid = (lo + hi + 1) // 2
        cand = seed
        for i in missing[:mid]:
            cand |= 1 << i
        if oracle(cand):
            hi = mid - 1
        else:
            lo = mid
    current = seed
    for i in missing[:lo]:
        current |= 1 << i

    # greedy completion past the chain boundary; the boundary element itself
    # is already known to make the set feasible, and upper shape keeps every
    # earlier skip valid as the set grows
    for i in missing[lo + 1:]:
        cand = current | (1 << i)
        if not oracle(cand):
            current = cand
    return current


def grow_maximal_infeasible(oracle: MembershipOracle, seed: int) -> int:
    """Grow an infeasible seed of an upper-shaped oracle to a maximal
    non-member: every further single element lands in the system."""
    validate_subset(seed, oracle.n)
    if oracle(seed):
        raise ValueError("seed is feasible; nothing to grow")
    return _grow_unchecked(oracle, seed)


def _shrink_unchecked(oracle: MembershipOracle, seed: int) -> int:
    present = [i for i in range(oracle.n) if seed >> i & 1]

    lo, hi = 0, len(present)  # invariant: removing prefix lo stays infeasible
    while lo < hi:
        mid = (lo + hi + 1) // 2
        cand = seed
        for i in present[:mid]:
            cand &= ~(1 << i)
        if oracle(cand):
            hi = mid - 1
        else:
            lo = mid
    current = seed
    for i in present[:lo]:
        current &= ~(1 << i)

    for i in present[lo + 1:]:
        cand = current & ~(1 << i)
        if not oracle(cand):
            current = cand
    return current


def shrink_minimal_infeasible(oracle: MembershipOracle, seed: int) -> int:
    """Shrink an infeasible seed of a lower-shaped oracle to a minimal
    non-member: removing any single element lands in the system."""
    validate_subset(seed, oracle.n)
    if oracle(seed):
        raise ValueError("seed is feasible; nothing to shrink")
    return _shrink_unchecked(oracle, seed)


def separate(oracle: MembershipOracle, point: int) -> SeparationResult:
    """Feasibility check plus violated-row generation for monotone shapes.

    The emitted row is violated by the query point and satisfied by every
    member of the oracle's system (of the closure, in the bimonotone case).
    """
    before = oracle.calls
    full = (1 << oracle.n) - 1
    if oracle(point):
        return SeparationResult("feasible", None, None, oracle.calls - before)

    if oracle.shape == "upper":
        witness = _grow_unchecked(oracle, point)
        cut = LinearCut(oracle.n, full & ~witness, 0, 1)
    elif oracle.shape == "lower":
        witness = _shrink_unchecked(oracle, point)
        cut = LinearCut(oracle.n, 0, witness, 1)
    elif oracle.shape == "bimonotone":
        jmask = oracle.split.part_j
        flipped = MembershipOracle(
            oracle.n, lambda m: oracle(m ^ jmask), "upper",
            name=oracle.name + "|flipped")
        grown = _grow_unchecked(flipped, point ^ jmask)
        witness = grown ^ jmask
        pos = oracle.split.part_i & ~witness
        neg = oracle.split.part_j & witness
        cut = LinearCut(oracle.n, pos, neg, 1)
    else:
        raise UnsupportedShapeError(
            f"cannot separate a {oracle.shape!r}-shaped oracle")
    return SeparationResult("cut-found", cut, witness, oracle.calls - before)


def bilinear_constraint_oracle(R, alpha) -> MembershipOracle:
    """Upper oracle over rows+columns: a structure is a member when the
    entry-sum of the selected submatrix reaches the level alpha."""
    n = len(R)
    m = len(R[0]) if n else 0
    if n == 0 or m == 0:
        raise ValueError("matrix must be nonempty")
    for row in R:
        if len(row) != m:
            raise ValueError("matrix rows have unequal lengths")
        for value in row:
            if value < 0:
                raise ValueError("negative entries break monotonicity")

    def member(mask: int) -> bool:
        total = 0
        rows = mask & ((1 << n) - 1)
        cols = mask >> n
        ri = rows
        while ri:
            rbit = ri & -ri
            ri ^= rbit
            i = rbit.bit_length() - 1
            cj = cols
            while cj:
                cbit = cj & -cj
                cj ^= cbit
                total += R[i][cbit.bit_length() - 1]
        return total >= alpha

    return MembershipOracle(n + m, member, "upper", name="bilinear-level")


def audit_shape(oracle: MembershipOracle, trials: int, rng_seed: int = 0) -> ShapeAuditReport:
    """Random single-element monotonicity probes against the declared shape."""
    import random

    rng = random.Random(rng_seed)
    report = ShapeAuditReport(trials)
    n = oracle.n
    if trials <= 0 or oracle.shape == "general":
        return report
    for _ in range(trials):
        t = rng.getrandbits(n)
        i = rng.randrange(n)
        bit = 1 << i
        if oracle.shape == "upper":
            if oracle(t) and not oracle(t | bit):
                report.violations.append((t, t | bit, "member lost a superset"))
        elif oracle.shape == "lower":
            if oracle(t) and not oracle(t & ~bit):
                report.violations.append((t, t & ~bit, "member lost a subset"))
        elif oracle.shape == "bimonotone":
            if oracle.split.part_i >> i & 1:
                if oracle(t) and not oracle(t | bit):
                    report.violations.append(
                        (t, t | bit, "member lost on adding an I-element"))
            else:
                if oracle(t) and not oracle(t & ~bit):
                    report.violations.append(
                        (t, t & ~bit, "member lost on dropping a J-element"))
        elif oracle.shape == "interval":
            u = rng.getrandbits(n)
            lo, hi = t & u, t | u
            if oracle(lo) and oracle(hi):
                mid = lo | (rng.getrandbits(n) & hi & ~lo)
                if not oracle(mid):
                    report.violations.append((lo, mid, "sandwiched set missing"))
    return report
