"""Tightest monotone inner/outer approximations, interval systems, and
bimonotone closures.

The inner approximations are the largest monotone systems contained in the
source; the outer ones are the up/down closures themselves.  Bimonotone
closures generalize both: a split (I, J) of the ground set closes members
under adding I-elements and removing J-elements.
"""

from dataclasses import dataclass

from .setsys import (
    GroundSet,
    SetSystem,
    complement,
    cocut,
    cut,
    down_closure,
    element_complement,
    up_closure,
    validate_subset,
    _axis_clear,
    _flip_bitmap,
    _up_bitmap,
    _down_bitmap,
)


@dataclass(frozen=True)
class MonotoneApprox:
    """The four tightest monotone approximations of one system."""

    inner_upper: SetSystem
    outer_upper: SetSystem
    inner_lower: SetSystem
    outer_lower: SetSystem
    exact_upper: bool
    exact_lower: bool


@dataclass(frozen=True)
class Bipartition:
    """A split of the ground set into an 'increasing' part I and a
    'decreasing' part J; either part may be empty."""

    ground: GroundSet
    part_i: int
    part_j: int

    def __post_init__(self):
        validate_subset(self.part_i, self.ground.n)
        validate_subset(self.part_j, self.ground.n)
        if self.part_i & self.part_j:
            raise ValueError("bipartition parts overlap")
        if self.part_i | self.part_j != self.ground.full:
            raise ValueError("bipartition does not cover the ground set")

    @classmethod
    def from_part_i(cls, n: int, part_i: int) -> "Bipartition":
        g = GroundSet(n)
        validate_subset(part_i, n)
        return cls(g, part_i, g.full & ~part_i)


@dataclass(frozen=True)
class BimonotoneSystem:
    """A system closed under the (I, J) order, with its extremal members."""

    split: Bipartition
    closure: SetSystem
    extremals: SetSystem


def upper_approx(s: SetSystem) -> tuple[SetSystem, SetSystem]:
    """Largest upper system inside s and smallest upper system around it."""
    inner = cut(element_complement(complement(s)))
    outer = up_closure(s)
    return inner, outer


def lower_approx(s: SetSystem) -> tuple[SetSystem, SetSystem]:
    """Largest lower system inside s and smallest lower system around it."""
    inner = cocut(element_complement(complement(s)))
    outer = down_closure(s)
    return inner, outer


def monotone_approx(s: SetSystem) -> MonotoneApprox:
    iu, ou = upper_approx(s)
    il, ol = lower_approx(s)
    return MonotoneApprox(
        inner_upper=iu,
        outer_upper=ou,
        inner_lower=il,
        outer_lower=ol,
        exact_upper=iu.members == s.members == ou.members,
        exact_lower=il.members == s.members == ol.members,
    )


@dataclass(frozen=True)
class EmbeddingVariant:
    name: str
    inner: SetSystem
    target: SetSystem
    exact: bool


def embedding_variants(s: SetSystem) -> list[EmbeddingVariant]:
    """The six derived inner approximations of the complement spaces.

    Each hitting-system variant sits inside its target, with equality exactly
    on the matching monotone class of the source; the co-hitting variants
    mirror them with the classes swapped.
    """
    comp = complement(s)
    ecomp = element_complement(s)
    both = element_complement(comp)
    rows = [
        ("C_ecomp", cut(ecomp), comp),
        ("C_comp", cut(comp), ecomp),
        ("C_id", cut(s), both),
        ("G_ecomp", cocut(ecomp), comp),
        ("G_comp", cocut(comp), ecomp),
        ("G_id", cocut(s), both),
    ]
    return [
        EmbeddingVariant(name, inner, target, inner.members == target.members)
        for name, inner, target in rows
    ]


# ---------------------------------------------------------------------------
# interval systems


def interval_closure(s: SetSystem) -> SetSystem:
    """Smallest family containing s that is closed under sandwiched sets."""
    return up_closure(s) & down_closure(s)


def is_interval(s: SetSystem) -> bool:
    return interval_closure(s).members == s.members


def _interval_block(n: int, lo: int, hi: int) -> int:
    """Bitmap of all T with lo subseteq T subseteq hi (empty if lo !<= hi)."""
    if lo & ~hi:
        return 0
    return _up_bitmap(1 << lo, n) & _down_bitmap(1 << hi, n)


def interval_decompose(s: SetSystem, strategy: str = "greedy") -> list[SetSystem]:
    """Write s as a union of interval systems.

    'singletons' emits one trivial interval per member.  'greedy' grows a
    block [lo, hi] around each still-uncovered member, widening lo downward
    and hi upward one element at a time while the whole block stays inside
    s; this only reduces the component count, correctness needs nothing
    beyond union = s.
    """
    if strategy == "singletons":
        return [SetSystem(s.ground, 1 << m) for m in s.masks()]
    if strategy != "greedy":
        raise ValueError(f"unknown decomposition strategy {strategy!r}")

    n = s.n
    remaining = s.members
    components: list[SetSystem] = []
    while remaining:
        seed_pos = (remaining & -remaining).bit_length() - 1
        lo = hi = seed_pos
        grown = True
        while grown:
            grown = False
            probe = lo
            while probe:
                bit = probe & -probe
                probe ^= bit
                block = _interval_block(n, lo ^ bit, hi)
                if block & ~s.members == 0:
                    lo ^= bit
                    grown = True
            probe = s.ground.full & ~hi
            while probe:
                bit = probe & -probe
                probe ^= bit
                block = _interval_block(n, lo, hi | bit)
                if block & ~s.members == 0:
                    hi |= bit
                    grown = True
        block = _interval_block(n, lo, hi)
        components.append(SetSystem(s.ground, block))
        remaining &= ~block
    return components


# ---------------------------------------------------------------------------
# bimonotone closure


def bimonotone_close(s: SetSystem, split: Bipartition) -> SetSystem:
    """Close s under adding I-elements and removing J-elements.

    Flipping the J coordinates turns the (I, J) order into plain inclusion,
    so the closure is flip -> up-closure -> flip.
    """
    if split.ground.n != s.n:
        raise ValueError("split and system live on different ground sets")
    n = s.n
    flipped = _flip_bitmap(s.members, n, split.part_j)
    closed = _up_bitmap(flipped, n)
    return SetSystem(s.ground, _flip_bitmap(closed, n, split.part_j))


def bimonotone_extremals(s: SetSystem, split: Bipartition) -> SetSystem:
    """Members that leave the system when any I-element is removed or any
    missing J-element is added; computed by direct neighbor tests."""
    if split.ground.n != s.n:
        raise ValueError("split and system live on different ground sets")
    n = s.n
    b = s.members
    dominated = 0
    probe = split.part_i
    while probe:
        bit = probe & -probe
        probe ^= bit
        i = bit.bit_length() - 1
        # T with i removed still a member -> T not extremal
        dominated |= (b & _axis_clear(n, i)) << (1 << i)
    probe = split.part_j
    while probe:
        bit = probe & -probe
        probe ^= bit
        j = bit.bit_length() - 1
        # T with j added still a member -> T not extremal
        dominated |= (b >> (1 << j)) & _axis_clear(n, j)
    return SetSystem(s.ground, b & ~dominated)


def bimonotone_closure(s: SetSystem, split: Bipartition) -> BimonotoneSystem:
    closed = bimonotone_close(s, split)
    return BimonotoneSystem(split, closed, bimonotone_extremals(closed, split))


def is_bimonotone(s: SetSystem, split: Bipartition) -> bool:
    return bimonotone_close(s, split).members == s.members


__all__ = [
    "MonotoneApprox",
    "Bipartition",
    "BimonotoneSystem",
    "EmbeddingVariant",
    "upper_approx",
    "lower_approx",
    "monotone_approx",
    "embedding_variants",
    "interval_closure",
    "is_interval",
    "interval_decompose",
    "bimonotone_close",
    "bimonotone_extremals",
    "bimonotone_closure",
    "is_bimonotone",
]
