"""Ground sets, explicit set systems, and the core system operators.

A system over a ground set of n elements is stored as a 2^n-bit membership
bitmap packed in one Python integer: bit T of the bitmap is set exactly when
the subset with element mask T belongs to the system.  Every operator below
is a word-parallel sweep over that bitmap (n shift/mask/or passes), so the
cost is O(n * 2^n / wordsize) regardless of how dense the system is.

Element masks are 0-based internally; the JSON interchange form uses sorted
1-based index lists.
"""

import os
import random
from dataclasses import dataclass
from typing import Iterator

DEFAULT_EXPLICIT_CAP = 22
_CAP_ENV = "MONOSET_EXPLICIT_CAP"


def explicit_cap() -> int:
    """Largest ground-set size allowed for explicit 2^n bitmaps."""
    raw = os.environ.get(_CAP_ENV)
    if raw is None:
        return DEFAULT_EXPLICIT_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{_CAP_ENV} must be >= 1, got {cap}")
    return cap


@dataclass(frozen=True)
class GroundSet:
    """The index set {1,..,n}, carried around as a size plus validation."""

    n: int

    def __post_init__(self):
        cap = explicit_cap()
        if not 1 <= self.n <= cap:
            raise ValueError(f"ground-set size must be in 1..{cap}, got {self.n}")

    @property
    def full(self) -> int:
        """Mask of the whole ground set."""
        return (1 << self.n) - 1

    @property
    def subset_count(self) -> int:
        return 1 << self.n


# ---------------------------------------------------------------------------
# subsets as plain int masks


def subset_from_indices(indices, n: int) -> int:
    """1-based index list -> element mask."""
    mask = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"element {i} outside ground set 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def subset_to_indices(mask: int) -> list[int]:
    """Element mask -> sorted 1-based index list."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def validate_subset(mask: int, n: int) -> int:
    if mask < 0 or mask >> n:
        raise ValueError(f"subset mask {mask:#x} has bits outside ground set of size {n}")
    return mask


# ---------------------------------------------------------------------------
# axis masks: bitmap positions whose element-bit i is clear

_axis_cache: dict[tuple[int, int], int] = {}


def _axis_clear(n: int, i: int) -> int:
    """Bitmap selecting all subset positions T with element i not in T."""
    key = (n, i)
    m = _axis_cache.get(key)
    if m is None:
        half = 1 << i
        m = (1 << half) - 1
        width = half << 1
        total = 1 << n
        while width < total:
            m |= m << width
            width <<= 1
        _axis_cache[key] = m
    return m


@dataclass(frozen=True)
class SetSystem:
    """An explicit family of subsets of a ground set, as a membership bitmap."""

    ground: GroundSet
    members: int

    def __post_init__(self):
        limit = 1 << self.ground.subset_count
        if self.members < 0 or self.members >= limit:
            raise ValueError("membership bitmap has positions outside the power set")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_masks(cls, n: int, masks) -> "SetSystem":
        g = GroundSet(n)
        bitmap = 0
        for m in masks:
            validate_subset(m, n)
            bitmap |= 1 << m
        return cls(g, bitmap)

    @classmethod
    def from_sets(cls, n: int, families) -> "SetSystem":
        """Build from an iterable of 1-based index collections."""
        return cls.from_masks(n, (subset_from_indices(s, n) for s in families))

    @classmethod
    def empty(cls, n: int) -> "SetSystem":
        return cls(GroundSet(n), 0)

    @classmethod
    def power_set(cls, n: int) -> "SetSystem":
        g = GroundSet(n)
        return cls(g, (1 << g.subset_count) - 1)

    @classmethod
    def random(cls, n: int, rng: random.Random, density: float = 0.5) -> "SetSystem":
        g = GroundSet(n)
        bitmap = 0
        for pos in range(g.subset_count):
            if rng.random() < density:
                bitmap |= 1 << pos
        return cls(g, bitmap)

    # -- queries -----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.ground.n

    def contains(self, mask: int) -> bool:
        validate_subset(mask, self.n)
        return bool(self.members >> mask & 1)

    def __len__(self) -> int:
        return self.members.bit_count()

    def masks(self) -> Iterator[int]:
        """Member element-masks in ascending order."""
        bitmap = self.members
        while bitmap:
            low = bitmap & -bitmap
            yield low.bit_length() - 1
            bitmap ^= low

    def member_sets(self) -> list[list[int]]:
        """Members as sorted 1-based index lists, ascending by mask."""
        return [subset_to_indices(m) for m in self.masks()]

    def issubset(self, other: "SetSystem") -> bool:
        self._check_same_ground(other)
        return self.members & ~other.members == 0

    def __or__(self, other: "SetSystem") -> "SetSystem":
        self._check_same_ground(other)
        return SetSystem(self.ground, self.members | other.members)

    def __and__(self, other: "SetSystem") -> "SetSystem":
        self._check_same_ground(other)
        return SetSystem(self.ground, self.members & other.members)

    def _check_same_ground(self, other: "SetSystem"):
        if self.ground.n != other.ground.n:
            raise ValueError("systems live on different ground sets")

    # -- interchange -------------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "members": self.member_sets()}

    @classmethod
    def from_dict(cls, doc: dict) -> "SetSystem":
        return cls.from_sets(int(doc["n"]), doc["members"])


@dataclass(frozen=True)
class FlipMask:
    """Index set along which subsets get complemented; applying twice is a no-op."""

    ground: GroundSet
    flipped: int

    def __post_init__(self):
        validate_subset(self.flipped, self.ground.n)


# ---------------------------------------------------------------------------
# bitmap kernels


def _up_bitmap(bitmap: int, n: int) -> int:
    for i in range(n):
        bitmap |= (bitmap & _axis_clear(n, i)) << (1 << i)
    return bitmap


def _down_bitmap(bitmap: int, n: int) -> int:
    for i in range(n):
        bitmap |= (bitmap >> (1 << i)) & _axis_clear(n, i)
    return bitmap


def _swap_axis(bitmap: int, n: int, i: int) -> int:
    """Exchange the member-bit of T and T xor {i} for every position T."""
    clear = _axis_clear(n, i)
    h = 1 << i
    return ((bitmap & clear) << h) | ((bitmap >> h) & clear)


def _flip_bitmap(bitmap: int, n: int, flip: int) -> int:
    while flip:
        low = flip & -flip
        bitmap = _swap_axis(bitmap, n, low.bit_length() - 1)
        flip ^= low
    return bitmap


def _full_bitmap(n: int) -> int:
    return (1 << (1 << n)) - 1


# ---------------------------------------------------------------------------
# the operators


def up_closure(s: SetSystem) -> SetSystem:
    """All supersets of members: the smallest upper system containing s."""
    return SetSystem(s.ground, _up_bitmap(s.members, s.n))


def down_closure(s: SetSystem) -> SetSystem:
    """All subsets of members: the smallest lower system containing s."""
    return SetSystem(s.ground, _down_bitmap(s.members, s.n))


def minimal(s: SetSystem) -> SetSystem:
    """Members with no proper member-subset; always an antichain."""
    n = s.n
    up = _up_bitmap(s.members, n)
    dominated = 0
    for i in range(n):
        dominated |= (up & _axis_clear(n, i)) << (1 << i)
    return SetSystem(s.ground, s.members & ~dominated)


def maximal(s: SetSystem) -> SetSystem:
    """Members with no proper member-superset."""
    n = s.n
    down = _down_bitmap(s.members, n)
    dominated = 0
    for i in range(n):
        dominated |= (down >> (1 << i)) & _axis_clear(n, i)
    return SetSystem(s.ground, s.members & ~dominated)


def complement(s: SetSystem) -> SetSystem:
    """All subsets of the ground set that are not members."""
    return SetSystem(s.ground, _full_bitmap(s.n) & ~s.members)


def element_complement(s: SetSystem) -> SetSystem:
    """Replace each member T by its ground-set complement."""
    return SetSystem(s.ground, _flip_bitmap(s.members, s.n, s.ground.full))


def cut(s: SetSystem) -> SetSystem:
    """All subsets meeting every member (the hitting sets of s).

    Computed as the element-complement of the complement of the up-closure:
    S hits every member iff no member fits inside the complement of S.
    """
    n = s.n
    bitmap = _full_bitmap(n) & ~_up_bitmap(s.members, n)
    return SetSystem(s.ground, _flip_bitmap(bitmap, n, s.ground.full))


def cocut(s: SetSystem) -> SetSystem:
    """All subsets S with S union T != ground set, for every member T."""
    return element_complement(cut(element_complement(s)))


def apply_flip(mask: FlipMask, s: SetSystem) -> SetSystem:
    """XOR every member with the flip index set; an involution on systems."""
    if mask.ground.n != s.n:
        raise ValueError("flip mask and system live on different ground sets")
    return SetSystem(s.ground, _flip_bitmap(s.members, s.n, mask.flipped))


def is_upper(s: SetSystem) -> bool:
    """Closed under adding single elements (hence all supersets)."""
    n = s.n
    b = s.members
    for i in range(n):
        if ((b & _axis_clear(n, i)) << (1 << i)) & ~b:
            return False
    return True


def is_lower(s: SetSystem) -> bool:
    """Closed under removing single elements (hence all subsets)."""
    n = s.n
    b = s.members
    for i in range(n):
        if ((b >> (1 << i)) & _axis_clear(n, i)) & ~b:
            return False
    return True


def monotone_shape(s: SetSystem) -> str:
    """One of 'upper', 'lower', 'both', or 'neither'."""
    up, low = is_upper(s), is_lower(s)
    if up and low:
        return "both"
    if up:
        return "upper"
    if low:
        return "lower"
    return "neither"


# ---------------------------------------------------------------------------
# operator algebra audit


def algebra_audit(s: SetSystem, companion: SetSystem | None = None,
                  seed: int = 0) -> dict[str, bool]:
    """Evaluate the operator identities and inclusions on a concrete system.

    Order statements need a second system; if none is supplied a seeded
    random companion on the same ground set is used, together with forced
    inclusion pairs derived from it.  Returns one boolean per named law.
    """
    n = s.n
    g = s.ground
    if companion is None:
        companion = SetSystem.random(n, random.Random(seed))
    elif companion.n != n:
        raise ValueError("companion must share the ground set")

    emptyset = SetSystem.empty(n)
    power = SetSystem.power_set(n)
    t = companion
    bigger = s | t          # s subset of bigger, by construction
    smaller = s & t         # smaller subset of s

    def eq(a: SetSystem, b: SetSystem) -> bool:
        return a.members == b.members

    res: dict[str, bool] = {}

    # complement
    res["A1"] = eq(complement(emptyset), power) and eq(complement(power), emptyset)
    res["A3"] = ((s.issubset(t)) == (complement(t).issubset(complement(s)))
                 and complement(bigger).issubset(complement(s))
                 and complement(s).issubset(complement(smaller)))
    res["A4"] = ((not is_upper(s) or is_lower(complement(s)))
                 and (not is_lower(s) or is_upper(complement(s))))
    res["A5"] = eq(complement(complement(s)), s)

    # element complement
    res["B1"] = eq(element_complement(emptyset), emptyset) and \
        eq(element_complement(power), power)
    res["B2"] = ((s.issubset(t)) == (element_complement(s).issubset(element_complement(t)))
                 and element_complement(s).issubset(element_complement(bigger)))
    res["B4"] = ((not is_upper(s) or is_lower(element_complement(s)))
                 and (not is_lower(s) or is_upper(element_complement(s))))
    res["B5"] = eq(element_complement(element_complement(s)), s)

    # cut
    res["C1"] = eq(cut(emptyset), power) and eq(cut(power), emptyset)
    res["C2"] = (len(cut(s)) == 0) == s.contains(0)
    res["C3"] = is_upper(cut(s))
    res["C4"] = eq(cut(s), cut(minimal(s)))
    res["C5"] = cut(bigger).issubset(cut(s)) and cut(s).issubset(cut(smaller))
    res["C6"] = eq(cut(cut(s)), up_closure(s))

    # cocut
    res["D1"] = eq(cocut(emptyset), power) and eq(cocut(power), emptyset)
    res["D2"] = (len(cocut(s)) == 0) == s.contains(g.full)
    res["D3"] = is_lower(cocut(s))
    res["D4"] = eq(cocut(s), cocut(maximal(s)))
    res["D5"] = cocut(bigger).issubset(cocut(s)) and cocut(s).issubset(cocut(smaller))
    res["D6"] = eq(cocut(cocut(s)), down_closure(s))

    # interactions
    res["E1"] = eq(element_complement(complement(s)), complement(element_complement(s)))
    res["E2"] = (eq(element_complement(maximal(s)), minimal(element_complement(s)))
                 and eq(element_complement(minimal(s)), maximal(element_complement(s))))
    res["E3"] = (eq(up_closure(element_complement(s)), element_complement(down_closure(s)))
                 and eq(down_closure(element_complement(s)),
                        element_complement(up_closure(s))))
    res["E4"] = (eq(cut(element_complement(s)), element_complement(cocut(s)))
                 and eq(cocut(element_complement(s)), element_complement(cut(s))))
    res["E5"] = (complement(up_closure(s)).issubset(down_closure(complement(s)))
                 and complement(down_closure(s)).issubset(up_closure(complement(s))))
    res["E6"] = (minimal(complement(s)).issubset(complement(maximal(s)))
                 and maximal(complement(s)).issubset(complement(minimal(s))))
    first_inc = cocut(complement(s)).issubset(complement(cut(s)))
    second_inc = cut(complement(s)).issubset(complement(cocut(s)))
    first_eq = eq(cocut(complement(s)), complement(cut(s)))
    second_eq = eq(cut(complement(s)), complement(cocut(s)))
    res["E7"] = (first_inc and second_inc
                 and first_eq == is_upper(s) and second_eq == is_lower(s))

    return res


ALGEBRA_ITEMS = (
    "A1", "A3", "A4", "A5",
    "B1", "B2", "B4", "B5",
    "C1", "C2", "C3", "C4", "C5", "C6",
    "D1", "D2", "D3", "D4", "D5", "D6",
    "E1", "E2", "E3", "E4", "E5", "E6", "E7",
)
