"""Operator tests: worked examples frozen against brute force, plus seeded
random property sweeps and the full algebra audit."""

import json
import random

import pytest

from monoset import setsys as ss


# ---------------------------------------------------------------------------
# brute-force references (independent of the bitmap kernels)


def brute(n, members):
    return sorted(set(members))


def brute_up(n, members):
    out = set()
    for t in range(1 << n):
        if any(t & m == m for m in members):
            out.add(t)
    return sorted(out)


def brute_down(n, members):
    out = set()
    for t in range(1 << n):
        if any(t & m == t for m in members):
            out.add(t)
    return sorted(out)


def brute_minimal(n, members):
    mem = set(members)
    return sorted(t for t in mem
                  if not any(o != t and o & t == o for o in mem))


def brute_maximal(n, members):
    mem = set(members)
    return sorted(t for t in mem
                  if not any(o != t and o & t == t for o in mem))


def brute_cut(n, members):
    return sorted(s for s in range(1 << n)
                  if all(s & t for t in members))


def brute_cocut(n, members):
    full = (1 << n) - 1
    return sorted(s for s in range(1 << n)
                  if all(s | t != full for t in members))


def masks_of(system):
    return list(system.masks())


def sys_of(n, families):
    return ss.SetSystem.from_sets(n, families)


def random_system(n, rng, density=None):
    if density is None:
        density = rng.random()
    return ss.SetSystem.random(n, rng, density)


# ---------------------------------------------------------------------------
# ground set and subsets


def test_ground_set_bounds():
    ss.GroundSet(1)
    ss.GroundSet(ss.explicit_cap())
    with pytest.raises(ValueError):
        ss.GroundSet(0)
    with pytest.raises(ValueError):
        ss.GroundSet(ss.explicit_cap() + 1)


def test_cap_override(monkeypatch):
    monkeypatch.setenv("MONOSET_EXPLICIT_CAP", "5")
    with pytest.raises(ValueError):
        ss.GroundSet(6)
    ss.GroundSet(5)
    monkeypatch.setenv("MONOSET_EXPLICIT_CAP", "junk")
    with pytest.raises(ValueError):
        ss.GroundSet(3)


def test_subset_round_trip():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 12)
        mask = rng.getrandbits(n)
        ids = ss.subset_to_indices(mask)
        assert ids == sorted(ids)
        assert ss.subset_from_indices(ids, n) == mask
    with pytest.raises(ValueError):
        ss.subset_from_indices([4], 3)
    with pytest.raises(ValueError):
        ss.validate_subset(1 << 3, 3)


def test_system_json_round_trip():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 6)
        s = random_system(n, rng)
        doc = json.loads(json.dumps(s.to_dict()))
        assert ss.SetSystem.from_dict(doc).members == s.members


# ---------------------------------------------------------------------------
# worked examples


def test_up_closure_examples():
    assert len(ss.up_closure(ss.SetSystem.empty(3))) == 0
    got = ss.up_closure(sys_of(3, [[1, 2], [2, 3]]))
    assert got.member_sets() == [[1, 2], [2, 3], [1, 2, 3]]
    assert ss.up_closure(sys_of(3, [[]])).members == \
        ss.SetSystem.power_set(3).members


def test_down_closure_examples():
    assert ss.down_closure(sys_of(3, [[1, 2, 3]])).members == \
        ss.SetSystem.power_set(3).members
    got = ss.down_closure(sys_of(3, [[1, 2]]))
    assert got.member_sets() == [[], [1], [2], [1, 2]]
    assert len(ss.down_closure(ss.SetSystem.empty(3))) == 0


def test_minimal_maximal_examples():
    s = sys_of(3, [[1], [1, 2], [2, 3]])
    assert ss.minimal(s).member_sets() == [[1], [2, 3]]
    assert ss.maximal(s).member_sets() == [[1, 2], [2, 3]]
    antichain = sys_of(3, [[1], [2, 3]])
    assert ss.minimal(antichain).members == antichain.members
    assert ss.maximal(antichain).members == antichain.members
    assert len(ss.minimal(ss.SetSystem.empty(3))) == 0
    assert len(ss.maximal(ss.SetSystem.empty(3))) == 0


def test_complement_examples():
    empty2 = ss.SetSystem.empty(2)
    assert ss.complement(empty2).member_sets() == [[], [1], [2], [1, 2]]
    assert len(ss.complement(ss.SetSystem.power_set(2))) == 0
    rng = random.Random(3)
    for _ in range(20):
        s = random_system(4, rng)
        assert ss.complement(ss.complement(s)).members == s.members


def test_element_complement_examples():
    got = ss.element_complement(sys_of(3, [[1], [2, 3]]))
    assert got.member_sets() == [[1], [2, 3]]  # family is self-paired here
    got2 = ss.element_complement(sys_of(3, [[1], [1, 2]]))
    assert got2.member_sets() == [[3], [2, 3]]
    assert len(ss.element_complement(ss.SetSystem.empty(3))) == 0
    rng = random.Random(5)
    for _ in range(20):
        s = random_system(4, rng)
        assert ss.element_complement(ss.element_complement(s)).members == s.members


def test_cut_examples():
    s = sys_of(3, [[1, 2], [2, 3]])
    got = ss.cut(s)
    assert got.member_sets() == [[2], [1, 2], [1, 3], [2, 3], [1, 2, 3]]
    assert ss.minimal(got).member_sets() == [[2], [1, 3]]
    assert ss.cut(ss.SetSystem.empty(3)).members == ss.SetSystem.power_set(3).members
    assert len(ss.cut(sys_of(3, [[], [1]]))) == 0


def test_cocut_examples():
    assert ss.cocut(ss.SetSystem.empty(3)).members == \
        ss.SetSystem.power_set(3).members
    assert len(ss.cocut(sys_of(3, [[1, 2, 3]]))) == 0
    # by definition: S u {1} != {1,2} iff 2 not in S
    got = ss.cocut(sys_of(2, [[1]]))
    assert got.member_sets() == [[], [1]]
    assert masks_of(got) == brute_cocut(2, [0b01])


def test_flip_examples():
    s = sys_of(2, [[1], [1, 2]])
    flip = ss.FlipMask(s.ground, ss.subset_from_indices([1], 2))
    got = ss.apply_flip(flip, s)
    assert got.member_sets() == [[], [2]]
    assert ss.apply_flip(flip, got).members == s.members
    full = ss.FlipMask(s.ground, s.ground.full)
    assert ss.apply_flip(full, s).members == ss.element_complement(s).members
    none = ss.FlipMask(s.ground, 0)
    assert ss.apply_flip(none, s).members == s.members


def test_monotone_classification_examples():
    assert ss.monotone_shape(ss.SetSystem.power_set(3)) == "both"
    s = sys_of(3, [[1, 2], [1, 2, 3]])
    assert ss.is_upper(s) and not ss.is_lower(s)
    t = sys_of(2, [[1]])
    assert not ss.is_upper(t) and not ss.is_lower(t)
    assert ss.monotone_shape(t) == "neither"


# ---------------------------------------------------------------------------
# brute-force equivalence sweeps


OPS = [
    (ss.up_closure, brute_up),
    (ss.down_closure, brute_down),
    (ss.minimal, brute_minimal),
    (ss.maximal, brute_maximal),
    (ss.cut, brute_cut),
    (ss.cocut, brute_cocut),
]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ops_exhaustive_small(n):
    for bitmap in range(1 << (1 << n)):
        s = ss.SetSystem(ss.GroundSet(n), bitmap)
        members = masks_of(s)
        for op, ref in OPS:
            assert masks_of(op(s)) == ref(n, members), (op.__name__, members)
        # classification against the closure definition
        assert ss.is_upper(s) == (brute_up(n, members) == members)
        assert ss.is_lower(s) == (brute_down(n, members) == members)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_ops_random(n):
    rng = random.Random(100 + n)
    for _ in range(60):
        s = random_system(n, rng)
        members = masks_of(s)
        for op, ref in OPS:
            assert masks_of(op(s)) == ref(n, members), (op.__name__, n)


def test_flip_is_permutation():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(1, 5)
        s = random_system(n, rng)
        fmask = rng.getrandbits(n)
        flip = ss.FlipMask(s.ground, fmask)
        flipped = ss.apply_flip(flip, s)
        assert len(flipped) == len(s)
        assert sorted(m ^ fmask for m in s.masks()) == masks_of(flipped)
        assert ss.apply_flip(flip, flipped).members == s.members


# ---------------------------------------------------------------------------
# invariants and the algebra audit


def test_involutions_all_small_n():
    rng = random.Random(23)
    for n in range(1, 7):
        for _ in range(40):
            s = random_system(n, rng)
            assert ss.complement(ss.complement(s)).members == s.members
            assert ss.element_complement(ss.element_complement(s)).members == s.members


def test_envelopes():
    rng = random.Random(29)
    for n in range(1, 7):
        for _ in range(40):
            s = random_system(n, rng)
            assert ss.cut(ss.cut(s)).members == ss.up_closure(s).members
            assert ss.cocut(ss.cocut(s)).members == ss.down_closure(s).members


def test_order_laws():
    rng = random.Random(31)
    for _ in range(150):
        n = rng.randint(1, 6)
        a = random_system(n, rng)
        b = a | random_system(n, rng)
        assert ss.cut(b).issubset(ss.cut(a))
        assert ss.cocut(b).issubset(ss.cocut(a))
        assert ss.complement(b).issubset(ss.complement(a))
        assert ss.element_complement(a).issubset(ss.element_complement(b))


def test_anti_commutations():
    rng = random.Random(37)
    for _ in range(150):
        n = rng.randint(1, 6)
        s = random_system(n, rng)
        assert ss.element_complement(ss.complement(s)).members == \
            ss.complement(ss.element_complement(s)).members
        assert ss.up_closure(ss.element_complement(s)).members == \
            ss.element_complement(ss.down_closure(s)).members
        assert ss.minimal(ss.element_complement(s)).members == \
            ss.element_complement(ss.maximal(s)).members
        assert ss.cut(ss.element_complement(s)).members == \
            ss.element_complement(ss.cocut(s)).members


def test_antichain_outputs():
    rng = random.Random(41)
    for _ in range(100):
        n = rng.randint(1, 6)
        s = random_system(n, rng)
        for family in (ss.minimal(s), ss.maximal(s)):
            members = masks_of(family)
            for i, a in enumerate(members):
                for b in members[i + 1:]:
                    assert a & b != a and a & b != b, "comparable pair survived"


def test_algebra_audit_random():
    rng = random.Random(43)
    for n in range(1, 7):
        for trial in range(25):
            s = random_system(n, rng)
            report = ss.algebra_audit(s, seed=trial)
            assert set(report) == set(ss.ALGEBRA_ITEMS)
            bad = [k for k, v in report.items() if not v]
            assert not bad, (n, bad)


def test_algebra_audit_edge_systems():
    full = ss.SetSystem.power_set(3)
    report = ss.algebra_audit(full)
    assert all(report.values())
    # E7 equality holds on a system that is both upper and lower
    assert ss.cocut(ss.complement(full)).members == \
        ss.complement(ss.cut(full)).members

    s = sys_of(2, [[1]])
    report = ss.algebra_audit(s)
    assert all(report.values())
    # strict inclusion on a non-monotone system
    assert ss.cocut(ss.complement(s)).members != \
        ss.complement(ss.cut(s)).members
