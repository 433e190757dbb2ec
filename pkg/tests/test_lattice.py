import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ijord import oracles
from ijord.errors import NonIntegral, NonIntegralDimension, NotDivisor, PeriodMismatch, ValidationError, ZeroDeterminant
from ijord.ffpoly import Involution, field_from_cardinality
from ijord.lattice import (
    LatticeSeqSpec,
    epsilon_involution_hint,
    hom_lattice_jumps,
    jump_shift,
    same_jumps,
    signature_char,
    signature_dimension,
)


def test_jumps_mixed_steps_by_formula():
    # not realizable as a split principal chain (e/s must divide dim), so checked against the formula only
    jr = hom_lattice_jumps(LatticeSeqSpec(6, 0, 3, 3), LatticeSeqSpec(6, 0, 2, 2))
    assert jr.coset == (0, 1)
    assert jr.c == 1


def test_jumps_single_jump_chains():
    for e in (1, 2, 4, 6):
        for dW, dY in [(1, 1), (2, 3), (4, 2)]:
            jr = hom_lattice_jumps(LatticeSeqSpec(e, 0, e, dY), LatticeSeqSpec(e, 0, e, dW))
            assert jr.coset == (0, e) and jr.c == dW * dY


def test_jumps_translate_with_offset():
    e = 4
    base = hom_lattice_jumps(LatticeSeqSpec(e, 0, e, 2), LatticeSeqSpec(e, 0, e, 3))
    shifted = hom_lattice_jumps(LatticeSeqSpec(e, 0, e, 2), LatticeSeqSpec(e, e // 2, e, 3))
    assert shifted.offset == (base.offset + e // 2) % e and shifted.c == base.c


def test_jumps_errors():
    with pytest.raises(PeriodMismatch):
        hom_lattice_jumps(LatticeSeqSpec(2, 0, 1, 1), LatticeSeqSpec(4, 0, 1, 1))
    with pytest.raises(NonIntegralDimension):
        hom_lattice_jumps(LatticeSeqSpec(4, 0, 4, 1), LatticeSeqSpec(4, 0, 1, 1))
    with pytest.raises(ValidationError):
        LatticeSeqSpec(6, 0, 4, 1)


@pytest.mark.parametrize("e", [1, 2, 3, 4, 6])
def test_jumps_against_split_model(e):
    divisors = [s for s in range(1, e + 1) if e % s == 0]
    checked = 0
    for sY, sW, dY, dW in itertools.product(divisors, divisors, (1, 2, 3), (1, 2, 3)):
        if not (oracles.realizable(e, sY, dY) and oracles.realizable(e, sW, dW)):
            continue
        for aY, aW in itertools.product(range(sY), range(sW)):
            jr = hom_lattice_jumps(LatticeSeqSpec(e, aY, sY, dY), LatticeSeqSpec(e, aW, sW, dW))
            model = oracles.hom_lattice_bruteforce(
                e, oracles.split_offsets(e, aY, sY, dY), oracles.split_offsets(e, aW, sW, dW)
            )
            assert set(model) == {t for t in range(e) if (t - jr.offset) % jr.step == 0}
            assert set(model.values()) == {jr.c}
            checked += 1
    assert checked


def test_split_model_has_requested_jumps():
    for e, a, s, dim in [(6, 1, 2, 3), (4, 0, 4, 1), (6, 2, 3, 2)]:
        jumps = oracles.lattice_jumps(e, oracles.split_offsets(e, a, s, dim))
        assert set(jumps) == LatticeSeqSpec(e, a, s, dim).jumps()


def test_same_jumps_examples():
    assert same_jumps(4, 1, 2) is True
    assert same_jumps(4, 2, 2) is False
    assert same_jumps(4, 4, 2) is False
    with pytest.raises(NotDivisor):
        same_jumps(4, 3, 2)


def test_jump_shift():
    assert jump_shift(4, 1, 2) == 0
    assert jump_shift(4, 2, 2) == 1
    assert jump_shift(12, 4, 2) == Fraction(3, 2)


def test_signature_dimension_examples():
    assert signature_dimension(1, 1, 4) == 4
    assert signature_dimension(2, 1, 3) == 3
    with pytest.raises(NonIntegral):
        signature_dimension(1, 2, 3)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 2), st.integers(0, 2), st.integers(1, 6))
def test_shifted_case_preserves_parity(i, j, u, v, k):
    e_W, r_Y = 2**i * 3**u, 2**j * 3**v
    e = 2**4 * 3**2
    dim = k * r_Y
    if same_jumps(e, e_W, r_Y):
        return
    assert signature_dimension(e_W, r_Y, dim) % 2 == dim % 2


def test_signature_char_examples():
    for q in (3, 5, 7, 9, 25):
        assert signature_char(1, field_from_cardinality(q)) == 1
    F3 = field_from_cardinality(3)
    assert signature_char(F3.neg(1), F3) == -1
    with pytest.raises(ZeroDeterminant):
        signature_char(0, F3)


def test_signature_char_non_square_generator_of_nine():
    F = field_from_cardinality(9)
    gen = next(g for g in range(1, 9) if len({F.pow(g, k) for k in range(8)}) == 8)
    assert signature_char(gen, F) == -1
    assert oracles.action_sign(F, ((gen,),)) == -1


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_signature_char_is_permutation_sign_one_by_one(q):
    F = field_from_cardinality(q)
    for a in range(1, q):
        assert signature_char(a, F) == oracles.action_sign(F, ((a,),))


def test_signature_char_two_by_two_over_three():
    F = field_from_cardinality(3)
    for g in oracles.invertible_matrices(F, 2):
        assert signature_char(oracles.det_bruteforce(F, g), F) == oracles.action_sign(F, g)


def test_hint_examples():
    assert epsilon_involution_hint([]) is Involution.IDENTITY
    assert epsilon_involution_hint([(2, 1, 3)]) is Involution.NEGATE
    assert epsilon_involution_hint([(2, 1, 3), (1, 1, 5)]) is Involution.IDENTITY


@given(
    st.lists(st.tuples(st.sampled_from([1, 2, 4]), st.sampled_from([1, 2, 4]), st.integers(1, 3)), max_size=4),
    st.lists(st.tuples(st.sampled_from([1, 2]), st.integers(1, 3)), max_size=3),
)
def test_hint_ignores_even_terms(terms, evens):
    terms = [(eW, rY, k * rY) for eW, rY, k in terms]
    base = epsilon_involution_hint(terms)
    extra = [(1, 1, 2 * k) for _, k in evens]
    assert epsilon_involution_hint(terms + extra) is base
