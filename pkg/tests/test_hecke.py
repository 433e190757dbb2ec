from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ijord.endo import DualType
from ijord.errors import ContextMismatch, DegreeMismatch, NonHalfInteger, NotDivisible
from ijord.ffpoly import Involution, context_make, enumerate_self_dual_irreducible, x_minus_one, x_plus_one
from ijord.golden import maximal_descriptor, maximal_table, residue_degree_of_fixed_field
from ijord.hecke import hecke_parameter, hecke_params, reducibility_real_parts, unramified_twist_number
from ijord.jordan import breakdown, descriptor_context
from ijord.endo import EndoClassInvariants
from ijord.lusztig import GroupKind, GroupType, datum_validate

C3 = context_make(3, 1)
C9 = context_make(9, 2)


def test_unitary_with_b_one_gives_three_f():
    Q = enumerate_self_dual_irreducible(C9, 1)[0]
    d = datum_validate(GroupType(GroupKind.UNITARY, C9), 1, {Q: 1})
    for f0 in (1, 2, 3):
        assert hecke_parameter(Q, d, Involution.IDENTITY, 2 * f0) == 3 * f0


def test_symplectic_plus_pole():
    d = datum_validate(GroupType(GroupKind.SYMPLECTIC, C3), 1, {x_minus_one(C3): 1})
    assert hecke_parameter(x_minus_one(C3), d, Involution.IDENTITY, 1) == 1
    # the minus pole sees b_- = 0
    assert hecke_parameter(x_plus_one(C3), d, Involution.IDENTITY, 1) == 0


def test_even_orthogonal_empty_gives_zero():
    d = datum_validate(GroupType(GroupKind.EVEN_SO, C3), 0, {})
    for f in (1, 2, 5):
        assert hecke_parameter(x_minus_one(C3), d, Involution.IDENTITY, f) == 0
        assert hecke_parameter(x_plus_one(C3), d, Involution.IDENTITY, f) == 0


def test_exceptional_case_in_a_ramified_descriptor():
    # index 1, E/E0 ramified, m = 1, even orthogonal factor with a_+ = a_- = 0
    endo = EndoClassInvariants("R", 2, 2, 1, DualType.RAMIFIED)
    ctx = descriptor_context(3, endo)
    so = datum_validate(GroupType(GroupKind.EVEN_SO, ctx), 0, {})
    for Q in (x_minus_one(ctx), x_plus_one(ctx)):
        assert hecke_parameter(Q, so, Involution.IDENTITY, endo.f) == 0


def test_odd_orthogonal_minus_pole():
    d = datum_validate(GroupType(GroupKind.ODD_SO, C3), 4, {x_plus_one(C3): 4})
    assert hecke_parameter(x_plus_one(C3), d, Involution.IDENTITY, 1) == 3
    assert hecke_parameter(x_minus_one(C3), d, Involution.NEGATE, 1) == 3
    assert hecke_parameter(x_minus_one(C3), d, Involution.IDENTITY, 1) == 1


def test_generic_case_uses_degree():
    P = enumerate_self_dual_irreducible(C3, 2)[0]
    d = datum_validate(GroupType(GroupKind.SYMPLECTIC, C3), 3, {x_minus_one(C3): 1, P: 1})
    assert hecke_parameter(P, d, Involution.IDENTITY, 1) == 3
    assert hecke_parameter(P, d, Involution.IDENTITY, 2) == 6


def test_parameter_errors():
    d = datum_validate(GroupType(GroupKind.SYMPLECTIC, C3), 1, {x_minus_one(C3): 1})
    Q9 = enumerate_self_dual_irreducible(C9, 1)[0]
    with pytest.raises(ContextMismatch):
        hecke_parameter(Q9, d, Involution.IDENTITY, 1)
    with pytest.raises(DegreeMismatch):
        hecke_parameter(x_minus_one(C3), d, Involution.IDENTITY, 1, m=2)


@pytest.mark.parametrize("f", [1, 2, 3])
def test_real_parts_examples(f):
    assert reducibility_real_parts(3 * f, f, 2 * f) == (1, Fraction(1, 2))
    assert reducibility_real_parts(f, f, f) == (1, 0)
    assert reducibility_real_parts(0, f, f) == (Fraction(1, 2), Fraction(1, 2))


def test_real_parts_reject_non_half_integers():
    with pytest.raises(NonHalfInteger):
        reducibility_real_parts(1, 0, 3)


@given(st.integers(0, 40), st.integers(0, 40), st.integers(1, 6))
def test_real_parts_are_symmetric_and_ordered(r0, r1, t):
    try:
        s, d = reducibility_real_parts(r0, r1, t)
    except NonHalfInteger:
        return
    assert (s, d) == reducibility_real_parts(r1, r0, t)
    assert s >= d >= 0
    assert s + d == Fraction(max(r0, r1), t)


def test_twist_number():
    assert unramified_twist_number(2, 1) == 2
    assert unramified_twist_number(4, 2) == 2
    for e, f, m in [(2, 1, 1), (2, 2, 3), (4, 1, 2)]:
        assert unramified_twist_number(e * f * m, e) == f * m
    with pytest.raises(NotDivisible):
        unramified_twist_number(3, 2)


# the maximal example


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("f0", [1, 2])
def test_maximal_unramified(q, f0):
    desc = maximal_descriptor(DualType.UNRAMIFIED, q, f0)
    f = residue_degree_of_fixed_field(desc)
    assert f == f0
    rows = maximal_table(desc)
    pairs = {(r.r_a, r.r_b) for r in rows}
    parts = {r.real_parts for r in rows}
    assert pairs == {(3 * f, f), (f, f)}
    assert parts == {(1, Fraction(1, 2)), (Fraction(1, 2), 0)}
    # the distinguished choice is unique
    assert sum(r.r_a == 3 * f for r in rows) == 1


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("f0", [1, 2])
def test_maximal_ramified(q, f0):
    desc = maximal_descriptor(DualType.RAMIFIED, q, f0)
    f = residue_degree_of_fixed_field(desc)
    rows = maximal_table(desc)
    assert {(r.r_a, r.r_b) for r in rows} == {(f, f), (0, f)}
    assert {r.real_parts for r in rows} == {(1, 0), (Fraction(1, 2), Fraction(1, 2))}
    assert sum(r.r_a == f for r in rows) == 1


def test_parity_coherence(small_corpus):
    for desc in small_corpus:
        for row in breakdown(desc):
            t = row.params.t_rho
            a, b = row.params.r0 / t, row.params.r1 / t
            assert (a.denominator == 1) == (b.denominator == 1)


def test_hecke_params_bundle():
    d0 = datum_validate(GroupType(GroupKind.SYMPLECTIC, C3), 1, {x_minus_one(C3): 1})
    d1 = datum_validate(GroupType(GroupKind.ODD_SO, C3), 0, {})
    hp = hecke_params(x_minus_one(C3), (d0, d1), (Involution.IDENTITY, Involution.IDENTITY), 1)
    assert (hp.r0, hp.r1, hp.t_rho) == (1, 1, 1)
    assert hp.real_parts() == (1, 0)
    assert hp.two_r_over_f_is_odd is False
