"""Linear inequalities over binary variables and their generation from
set systems.

One shape covers everything here: sum_{i in pos} x_i + sum_{j in neg}
(1 - x_j) >= rhs.  Covering rows have empty neg, elimination rows have empty
pos (sum_{i in T} x_i <= |T|-1 is the same inequality written over the
complemented literals), bimonotone rows mix both, and no-good rows use all n
literals.  Facet claims are checked two ways: the swap criterion on the set
system, and an exact rank computation over the actual binary points.
"""

from dataclasses import dataclass
from fractions import Fraction

from .approx import BimonotoneSystem, bimonotone_extremals
from .setsys import (
    SetSystem,
    complement,
    element_complement,
    is_upper,
    minimal,
    subset_from_indices,
    subset_to_indices,
    validate_subset,
)


@dataclass(frozen=True)
class LinearCut:
    """sum_{i in pos} x_i + sum_{j in neg} (1 - x_j) >= rhs over n binaries."""

    n: int
    pos: int
    neg: int
    rhs: int

    def __post_init__(self):
        validate_subset(self.pos, self.n)
        validate_subset(self.neg, self.n)
        if self.pos & self.neg:
            raise ValueError("a variable cannot appear with both polarities")

    def satisfied_by(self, point: int) -> bool:
        value = (self.pos & point).bit_count() + (self.neg & ~point).bit_count()
        return value >= self.rhs

    def flip(self, index_set: int) -> "LinearCut":
        """Rewrite the cut after substituting x_i -> 1-x_i on the index set."""
        validate_subset(index_set, self.n)
        new_pos = (self.pos & ~index_set) | (self.neg & index_set)
        new_neg = (self.neg & ~index_set) | (self.pos & index_set)
        return LinearCut(self.n, new_pos, new_neg, self.rhs)

    def to_dict(self) -> dict:
        return {
            "pos": subset_to_indices(self.pos),
            "neg": subset_to_indices(self.neg),
            "rhs": self.rhs,
        }

    @classmethod
    def from_dict(cls, doc: dict, n: int) -> "LinearCut":
        return cls(
            n,
            subset_from_indices(doc.get("pos", []), n),
            subset_from_indices(doc.get("neg", []), n),
            int(doc["rhs"]),
        )


def covering_cut(index_set: int, n: int) -> LinearCut:
    return LinearCut(n, index_set, 0, 1)


def elimination_cut(index_set: int, n: int) -> LinearCut:
    return LinearCut(n, 0, index_set, 1)


@dataclass(frozen=True)
class FacetReport:
    cut: LinearCut
    quasi_feasible: bool
    size_condition: bool
    verdict: str  # "facet" | "not-facet" | "precondition-failed"


# ---------------------------------------------------------------------------
# cut families


def covering_index_family(s: SetSystem) -> SetSystem:
    """Minimal complements of non-members; the covering-row index sets."""
    return minimal(element_complement(complement(s)))


def covering_cuts(s: SetSystem) -> list[LinearCut]:
    """One covering row per minimal complemented non-member.

    The binary points satisfying all rows are exactly the largest upper
    system inside s.
    """
    return [covering_cut(m, s.n) for m in covering_index_family(s).masks()]


def elimination_cuts(s: SetSystem) -> list[LinearCut]:
    """One elimination row per minimal non-member; the satisfied points are
    the largest lower system inside s."""
    return [elimination_cut(m, s.n) for m in minimal(complement(s)).masks()]


def bimonotone_cuts(b: BimonotoneSystem) -> list[LinearCut]:
    """Mixed rows that describe the closure exactly.

    Index structures are the extremal members of the complemented-complement
    of the closure under the same split; each contributes x-literals on its
    I-part and (1-x)-literals on the missing J-part.
    """
    split = b.split
    n = b.closure.n
    family = bimonotone_extremals(
        element_complement(complement(b.closure)), split)
    out = []
    for t in family.masks():
        pos = t & split.part_i
        neg = split.part_j & ~t
        out.append(LinearCut(n, pos, neg, 1))
    return out


def no_good_cut(point: int, n: int) -> LinearCut:
    """The weakest row excluding exactly one binary point."""
    validate_subset(point, n)
    full = (1 << n) - 1
    return LinearCut(n, full & ~point, point, 1)


# ---------------------------------------------------------------------------
# quasi-feasibility and facet certification


def is_quasi_feasible(s: SetSystem, t: int) -> bool:
    """True when every element of the non-member t admits a one-for-one swap
    with an outside element that lands back in s."""
    validate_subset(t, s.n)
    if s.contains(t):
        raise ValueError("quasi-feasibility is defined for non-members only")
    outside = s.ground.full & ~t
    probe = t
    while probe:
        bit = probe & -probe
        probe ^= bit
        base = t ^ bit
        swap = outside
        ok = False
        while swap:
            add = swap & -swap
            swap ^= add
            if s.contains(base | add):
                ok = True
                break
        if not ok:
            return False
    return True


def facet_check(s: SetSystem, cut_index: int) -> FacetReport:
    """Certify one covering row of an upper system via the swap criterion.

    Requires every index set in the covering family to have size >= 2;
    outside that regime the criterion does not apply and the verdict is
    'precondition-failed'.
    """
    if not is_upper(s):
        raise ValueError("facet certification needs an upper system")
    family = covering_index_family(s)
    if not family.contains(cut_index):
        raise ValueError("index set is not a minimal covering index of the system")
    size_condition = all(m.bit_count() >= 2 for m in family.masks())
    row = covering_cut(cut_index, s.n)
    if not size_condition:
        return FacetReport(row, False, False, "precondition-failed")
    quasi = is_quasi_feasible(s, s.ground.full & ~cut_index)
    return FacetReport(row, quasi, True, "facet" if quasi else "not-facet")


# ---------------------------------------------------------------------------
# exact polytope-face oracle (desk scale)


def _affine_dim(points: list[int], n: int) -> int:
    """Affine dimension of a list of 0/1 points, by exact elimination."""
    if not points:
        return -1
    base = points[0]
    rows = []
    for p in points[1:]:
        rows.append([Fraction((p >> i & 1) - (base >> i & 1)) for i in range(n)])
    rank = 0
    col = 0
    while col < n and rank < len(rows):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / pv
                for c in range(col, n):
                    rows[r][c] -= factor * rows[rank][c]
        rank += 1
        col += 1
    return rank


def face_rank_oracle(s: SetSystem, cut: LinearCut) -> tuple[bool, int, int]:
    """(valid, face_dim, hull_dim) of a row against the member points of s.

    Exhaustive over the member points, exact rational arithmetic; the row is
    facet-defining iff it is valid and face_dim == hull_dim - 1.
    """
    n = s.n
    if n > 10:
        raise ValueError("rank oracle is exhaustive; ground set capped at 10")
    if cut.n != n:
        raise ValueError("cut and system sizes differ")
    members = list(s.masks())
    valid = True
    tight = []
    for m in members:
        value = (cut.pos & m).bit_count() + (cut.neg & ~m).bit_count()
        if value < cut.rhs:
            valid = False
        elif value == cut.rhs:
            tight.append(m)
    hull_dim = _affine_dim(members, n)
    face_dim = _affine_dim(tight, n)
    return valid, face_dim, hull_dim
