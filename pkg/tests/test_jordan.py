from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ijord.endo import DualType, EndoClassInvariants
from ijord.errors import (
    DescriptorError,
    DimensionMismatch,
    DuplicateEndoClass,
    IdentityViolation,
    NonHalfInteger,
)
from ijord.ffpoly import Involution, SelfDualPoly, apply_involution, x_minus_one, x_plus_one
from ijord.golden import maximal_descriptor
from ijord.jordan import (
    depth_zero_descriptor,
    descriptor_context,
    identity_check,
    ijord_batch,
    ijord_general,
    ijord_simple,
    inertial_contribution,
    jordan_blocks_from_real_part,
    make_descriptor,
)
from ijord.lusztig import GroupKind, GroupType, datum_validate
from ijord.verify import mutant


def test_blocks_from_real_parts():
    assert jordan_blocks_from_real_part(0) == []
    assert jordan_blocks_from_real_part(Fraction(1, 2)) == []
    assert jordan_blocks_from_real_part(1) == [1]
    assert jordan_blocks_from_real_part(Fraction(5, 2)) == [4, 2]
    assert jordan_blocks_from_real_part(3) == [5, 3, 1]
    with pytest.raises(NonHalfInteger):
        jordan_blocks_from_real_part(Fraction(1, 3))


@pytest.mark.parametrize("f", [1, 2, 3])
def test_contribution_examples(f):
    assert inertial_contribution(3 * f, f, 2 * f) == 1
    assert inertial_contribution(f, f, f) == 1
    assert inertial_contribution(0, 0, f) == 0


@given(st.integers(0, 30), st.integers(0, 30), st.integers(1, 5))
def test_contribution_matches_block_ladders(r0, r1, t):
    if (r0 + r1) % t or (r0 - r1) % t:
        return
    s, d = Fraction(r0 + r1, 2 * t), Fraction(abs(r0 - r1), 2 * t)
    ladders = sum(jordan_blocks_from_real_part(s)) + sum(jordan_blocks_from_real_part(d))
    assert inertial_contribution(r0, r1, t) == ladders


# simple descriptors


@pytest.mark.parametrize("f0", [1, 2])
def test_maximal_unramified_multiset(f0):
    desc = maximal_descriptor(DualType.UNRAMIFIED, 3, f0)
    ij = ijord_simple(desc)
    # real parts {1, 1/2}: a single block m = 1 from the first, none from the second
    assert [e.m for e in ij.entries] == [1]
    assert ij.entries[0].deg_rho == 2 * f0
    assert ij.total == 2 * desc.N
    assert identity_check(desc, ij).ok


@pytest.mark.parametrize("f0", [1, 2])
def test_maximal_ramified_multiset(f0):
    desc = maximal_descriptor(DualType.RAMIFIED, 3, f0)
    ij = ijord_simple(desc)
    assert [(e.poly, e.m, e.deg_rho) for e in ij.entries] == [(x_minus_one(desc.ctx), 1, 2 * f0)]
    assert ij.total == 2 * desc.N


def test_minimal_depth_zero_by_hand():
    # Sp(0) x Sp(0): both data {X-1: 1}, b_+ = 0, so r0 = r1 = 1 and t = 1
    desc = depth_zero_descriptor(3)
    ij = ijord_simple(desc)
    assert [(e.poly, e.m, e.deg_rho) for e in ij.entries] == [(x_minus_one(desc.ctx), 1, 1)]
    assert ij.total == 1 == desc.expected_total


def test_depth_zero_sp2():
    desc = depth_zero_descriptor(3)
    ctx = desc.ctx
    sp = GroupType(GroupKind.SYMPLECTIC, ctx)
    d0 = datum_validate(sp, 3, {x_minus_one(ctx): 1, x_plus_one(ctx): 2})
    d1 = datum_validate(sp, 1, {x_minus_one(ctx): 1})
    desc = depth_zero_descriptor(3, 1, 0, dict(d0.a_map))
    rep = identity_check(desc, ijord_simple(desc))
    assert rep.depth_zero and rep.total == 3 == 2 * desc.N + 1
    assert desc == make_descriptor(3, desc.endo, 1, (d0, d1))


def test_identity_holds_on_small_corpus(small_corpus):
    assert len(small_corpus) > 100
    for desc in small_corpus:
        rep = identity_check(desc, ijord_simple(desc))
        assert rep.total == (2 * desc.N + 1 if desc.depth_zero else 2 * desc.N)
        assert sum(r.weighted for r in rep.rows) == rep.total


def test_corrupted_datum_raises(small_corpus):
    desc = next(d for d in small_corpus if not d.depth_zero)
    bad = mutant(desc)
    with pytest.raises(IdentityViolation) as info:
        identity_check(bad, ijord_simple(bad))
    assert info.value.report is not None
    assert not info.value.report.ok


def test_no_holes_on_small_corpus(small_corpus):
    for desc in small_corpus[:200]:
        assert ijord_simple(desc).has_no_holes()


def test_batch_preserves_order(small_corpus):
    descs = small_corpus[:60]
    serial = [ijord_simple(d) for d in descs]
    assert ijord_batch(descs, workers=1) == serial
    assert ijord_batch(descs, workers=4) == serial


# validation


def _ramified(N=1):
    endo = EndoClassInvariants("R", 2, 2, 1, DualType.RAMIFIED)
    ctx = descriptor_context(3, endo)
    sp = datum_validate(GroupType(GroupKind.SYMPLECTIC, ctx), 1, {x_minus_one(ctx): 1})
    so = datum_validate(GroupType(GroupKind.ODD_SO, ctx), 0, {})
    return endo, ctx, sp, so


def test_descriptor_validation_errors():
    endo, ctx, sp, so = _ramified()
    assert make_descriptor(3, endo, 1, (sp, so)).dim_E_V == 1
    with pytest.raises(DimensionMismatch):
        make_descriptor(3, endo, 2, (sp, so))
    with pytest.raises(DescriptorError):
        make_descriptor(3, endo, 0, (sp, so))
    with pytest.raises(DescriptorError):
        make_descriptor(3, endo, 1, (sp, sp))
    with pytest.raises(DescriptorError):
        make_descriptor(5, endo, 1, (sp, so))
    with pytest.raises(DescriptorError):
        make_descriptor(3, endo, 1, (sp, so), {(2, 1): Involution.NEGATE})


def test_depth_zero_rejects_negation():
    desc = depth_zero_descriptor(3)
    with pytest.raises(DescriptorError):
        make_descriptor(3, desc.endo, 0, desc.data, {(0, 1): Involution.NEGATE})


def test_involution_moves_support():
    endo, ctx, sp, _ = _ramified()
    P2 = SelfDualPoly.of(ctx, (1, 0, 1))
    so = datum_validate(GroupType(GroupKind.ODD_SO, ctx), 2, {P2: 1})
    endo3 = EndoClassInvariants("R3", 2, 2, 1, DualType.RAMIFIED)
    plain = make_descriptor(3, endo3, 3, (sp, so))
    neg = make_descriptor(3, endo3, 3, (sp, so), {(1, 2): Involution.NEGATE})
    assert apply_involution(Involution.NEGATE, P2) == P2
    assert ijord_simple(plain).total == ijord_simple(neg).total == 6


# general cuspidals


def test_general_single_depth_zero_part_equals_simple():
    desc = depth_zero_descriptor(3)
    res = ijord_general([desc])
    assert res.multiset == ijord_simple(desc)
    assert res.total == 1


def test_general_inserts_trivial_depth_zero_part():
    desc = maximal_descriptor(DualType.RAMIFIED, 3, 1)
    res = ijord_general([(desc, False)])
    assert res.parts[0].depth_zero and res.parts[0].N == 0
    assert res.total == 2 * res.N + 1 == 3


def test_general_two_parts():
    ctx = depth_zero_descriptor(3).ctx
    sp = GroupType(GroupKind.SYMPLECTIC, ctx)
    d0 = datum_validate(sp, 3, {x_minus_one(ctx): 1, x_plus_one(ctx): 2})
    dz = depth_zero_descriptor(3, 1, 0, dict(d0.a_map))
    pos = maximal_descriptor(DualType.UNRAMIFIED, 3, 1)
    res = ijord_general([(dz, False), (pos, False)], N=2)
    assert res.total == (2 * dz.N + 1) + 2 * pos.N == 2 * 2 + 1
    assert res.multiset.total == ijord_simple(dz).total + ijord_simple(pos).total


def test_general_chi_flag_twists_labels_only():
    pos = maximal_descriptor(DualType.RAMIFIED, 3, 1)
    plain = ijord_general([(pos, False)])
    twisted = ijord_general([(pos, True)])
    assert twisted.chis == (False, True)
    a = sorted((e.m, e.deg_rho) for e in plain.multiset.entries)
    b = sorted((e.m, e.deg_rho) for e in twisted.multiset.entries)
    assert a == b
    moved = [e for e in twisted.multiset.entries if e.twisted]
    assert moved and all(e.poly == x_plus_one(pos.ctx) for e in moved)


def test_general_errors():
    pos = maximal_descriptor(DualType.RAMIFIED, 3, 1)
    with pytest.raises(DuplicateEndoClass):
        ijord_general([pos, pos])
    with pytest.raises(DimensionMismatch):
        ijord_general([pos], N=5)
    with pytest.raises(DescriptorError):
        ijord_general([])
    with pytest.raises(DescriptorError):
        ijord_general([pos, maximal_descriptor(DualType.UNRAMIFIED, 5, 1)])


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_composition_total_property(small_corpus, data):
    pos = [d for d in small_corpus if not d.depth_zero]
    dz = [d for d in small_corpus if d.depth_zero and d.q == 3]
    picked = {}
    for _ in range(data.draw(st.integers(1, 3))):
        d = data.draw(st.sampled_from(pos))
        if d.q == 3:
            picked.setdefault(d.endo.label, (d, data.draw(st.booleans())))
    parts = [data.draw(st.sampled_from(dz))] + list(picked.values())
    res = ijord_general(parts)
    assert res.total == 2 * res.N + 1


def test_replace_keeps_hash_consistent():
    desc = maximal_descriptor(DualType.RAMIFIED, 3, 1)
    assert hash(replace(desc)) == hash(desc)
