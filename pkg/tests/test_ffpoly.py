import itertools
import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ijord.errors import EvenCharacteristic, NonPrime, TooLarge, ZeroConstantTerm
from ijord.ffpoly import (
    Involution,
    MonicPoly,
    apply_involution,
    context_make,
    enumerate_self_dual_irreducible,
    field_from_cardinality,
    field_make,
    is_irreducible,
    is_irreducible_trial,
    monic_polys,
    poly_dual,
    x_minus_one,
    x_plus_one,
)
from ijord.oracles import eval_poly, self_dual_irreducible_bruteforce

SMALL_Q = (3, 5, 7, 9)


# fields


def test_prime_field():
    F = field_make(3, 1)
    assert F.q == 3 and list(F) == [0, 1, 2]
    assert F.mul(2, 2) == 1 and F.neg(1) == 2


def test_quadratic_extension_has_frobenius_bar():
    ctx = context_make(9, 2)
    F = ctx.field
    assert F.q == 9
    for a in F:
        assert ctx.bar(a) == F.pow(a, 3)
        assert ctx.bar(ctx.bar(a)) == a
    fixed = [a for a in F if ctx.bar(a) == a]
    assert len(fixed) == 3


def test_field_of_25_elements():
    F = field_make(5, 2)
    assert len(set(F)) == 25 == F.q


@pytest.mark.parametrize("q", [9, 25, 27, 49, 81])
def test_field_axioms_against_polynomial_model(q):
    F = field_from_cardinality(q)
    fp = field_make(F.p)
    mod = F.modulus
    # multiplication agrees with polynomial multiplication mod the modulus
    for a, b in itertools.product(range(0, q, max(1, q // 9)), repeat=2):
        av, bv = F._vec(a), F._vec(b)
        prod = [0] * (2 * F.k)
        for i, x in enumerate(av):
            for j, y in enumerate(bv):
                prod[i + j] = (prod[i + j] + x * y) % F.p
        for d in range(len(prod) - 1, F.k - 1, -1):
            c = prod[d]
            if c:
                for i in range(F.k + 1):
                    prod[d - F.k + i] = (prod[d - F.k + i] - c * mod[i]) % fp.p
        assert F._code(prod[: F.k]) == F.mul(a, b)
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1


def test_modulus_is_lexicographically_smallest():
    for p, k in [(3, 2), (3, 3), (5, 2), (7, 2)]:
        F = field_make(p, k)
        fp = field_make(p)
        cands = [c for c in monic_polys(fp, k, nonzero_constant=True) if is_irreducible_trial(MonicPoly(fp, c))]
        assert F.modulus == min(cands)


def test_field_is_deterministic_and_picklable():
    assert field_make(3, 4) is field_make(3, 4)
    F = pickle.loads(pickle.dumps(field_make(5, 2)))
    assert F == field_make(5, 2) and F.modulus == field_make(5, 2).modulus


def test_field_errors():
    with pytest.raises(NonPrime):
        field_make(9)
    with pytest.raises(EvenCharacteristic):
        field_make(2, 3)
    with pytest.raises(TooLarge):
        field_make(3, 20)
    with pytest.raises(TooLarge):
        field_make(7, 3, bound=100)
    with pytest.raises(NonPrime):
        field_from_cardinality(15)


def test_bound_from_environment(monkeypatch):
    monkeypatch.setenv("IJORD_BOUND", "50")
    with pytest.raises(TooLarge):
        field_make(7, 3)
    with pytest.raises(TooLarge):
        enumerate_self_dual_irreducible(context_make(5, 1), 3)


# duality


def test_dual_fixes_x_minus_one():
    ctx = context_make(3, 1)
    Q = MonicPoly(ctx.field, (2, 1))
    assert poly_dual(Q, ctx) == Q


def test_dual_of_linear_inverts_root():
    ctx = context_make(7, 1)
    F = ctx.field
    for a in range(2, 6):
        Q = MonicPoly(F, (F.neg(a), 1))
        assert poly_dual(Q, ctx).coeffs == (F.neg(F.inv(a)), 1)


def test_dual_of_quadratic_by_formula():
    # X^2 + X + 2 over GF(3): bar(2)^-1 = 2, reversed coefficients (1, 1, 2) scaled by 2
    ctx = context_make(3, 1)
    Q = MonicPoly(ctx.field, (2, 1, 1))
    assert poly_dual(Q, ctx).coeffs == (2, 2, 1)


def test_dual_needs_nonzero_constant():
    ctx = context_make(3, 1)
    with pytest.raises(ZeroConstantTerm):
        poly_dual(MonicPoly(ctx.field, (0, 1)), ctx)


@pytest.mark.parametrize("q,index", [(3, 1), (5, 1), (7, 1), (9, 1), (9, 2)])
def test_dual_is_an_involution_exhaustively(q, index):
    ctx = context_make(q, index)
    for m in (1, 2, 3):
        for c in monic_polys(ctx.field, m, nonzero_constant=True):
            Q = MonicPoly(ctx.field, c)
            assert poly_dual(poly_dual(Q, ctx), ctx) == Q


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(3, 1), (5, 1), (9, 2), (25, 2), (27, 1)]), st.integers(1, 5), st.data())
def test_dual_involution_property(qi, m, data):
    ctx = context_make(*qi)
    F = ctx.field
    c = [data.draw(st.integers(1, F.q - 1))] + [data.draw(st.integers(0, F.q - 1)) for _ in range(m - 1)] + [1]
    Q = MonicPoly(F, tuple(c))
    assert poly_dual(poly_dual(Q, ctx), ctx) == Q


# irreducibility


def test_irreducibility_examples():
    F = field_make(3)
    assert is_irreducible(MonicPoly(F, (1, 0, 1)))
    assert not is_irreducible(MonicPoly(F, (2, 0, 1)))
    for q in SMALL_Q:
        assert is_irreducible(MonicPoly(field_from_cardinality(q), (0, 1)))


@pytest.mark.parametrize("q,max_deg", [(3, 5), (5, 4), (7, 3), (9, 3)])
def test_rabin_agrees_with_trial_division(q, max_deg):
    F = field_from_cardinality(q)
    for m in range(1, max_deg + 1):
        for c in monic_polys(F, m):
            Q = MonicPoly(F, c)
            assert is_irreducible(Q) == is_irreducible_trial(Q), Q


def test_irreducible_count_matches_necklace_formula():
    # number of monic irreducibles of degree n is (1/n) sum_{d|n} mu(d) q^(n/d)
    from sympy import divisors, mobius

    for q, n in [(3, 4), (5, 3), (9, 2)]:
        F = field_from_cardinality(q)
        got = sum(is_irreducible(MonicPoly(F, c)) for c in monic_polys(F, n))
        want = sum(mobius(d) * q ** (n // d) for d in divisors(n)) // n
        assert got == want


# self-dual enumeration


def test_degree_one_index_one_is_plus_minus_one():
    for q in SMALL_Q:
        ctx = context_make(q, 1)
        assert set(enumerate_self_dual_irreducible(ctx, 1)) == {x_minus_one(ctx), x_plus_one(ctx)}


def test_gf3_degree_two_by_brute_force():
    ctx = context_make(3, 1)
    got = [P.coeffs for P in enumerate_self_dual_irreducible(ctx, 2)]
    assert got == self_dual_irreducible_bruteforce(ctx, 2) == [(1, 0, 1)]


def test_index_two_degree_one_is_norm_one_roots():
    ctx = context_make(9, 2)
    F = ctx.field
    roots = [a for a in range(1, 9) if F.mul(a, ctx.bar(a)) == 1]
    want = sorted((F.neg(a), 1) for a in roots)
    assert [P.coeffs for P in enumerate_self_dual_irreducible(ctx, 1)] == want
    assert len(want) == 4


@pytest.mark.parametrize("q,index", [(3, 1), (5, 1), (7, 1), (9, 1), (9, 2)])
def test_enumeration_matches_brute_force(q, index):
    ctx = context_make(q, index)
    for m in (1, 2, 3):
        got = [P.coeffs for P in enumerate_self_dual_irreducible(ctx, m)]
        assert got == self_dual_irreducible_bruteforce(ctx, m)


def test_odd_degree_above_one_is_empty_at_index_one():
    for q in (3, 5):
        assert enumerate_self_dual_irreducible(context_make(q, 1), 3) == []
        assert enumerate_self_dual_irreducible(context_make(q, 1), 5) == []


def test_self_reciprocal_counts():
    # index 1, degree 2n: (q^n - 1)/(2n) for n a power of 2, here n = 1, 2
    for q in (3, 5, 7):
        ctx = context_make(q, 1)
        assert len(enumerate_self_dual_irreducible(ctx, 2)) == (q - 1) // 2
        assert len(enumerate_self_dual_irreducible(ctx, 4)) == (q * q - 1) // 4


# involutions


def test_apply_involution_examples():
    ctx = context_make(3, 1)
    assert apply_involution(Involution.IDENTITY, x_minus_one(ctx)) == x_minus_one(ctx)
    assert apply_involution(Involution.NEGATE, x_minus_one(ctx)) == x_plus_one(ctx)


@pytest.mark.parametrize("q,index", [(3, 1), (5, 1), (7, 1), (9, 1), (9, 2)])
def test_negation_is_an_involution_on_self_dual_sets(q, index):
    ctx = context_make(q, index)
    F = ctx.field
    for m in (1, 2, 3):
        polys = enumerate_self_dual_irreducible(ctx, m)
        images = {apply_involution(Involution.NEGATE, P) for P in polys}
        assert images == set(polys)
        for P in polys:
            R = apply_involution(Involution.NEGATE, P)
            assert apply_involution(Involution.NEGATE, R) == P
            # R(x) = (-1)^m P(-x) pointwise
            sign = 1 if m % 2 == 0 else F.neg(1)
            for x in F:
                assert eval_poly(F, R.coeffs, x) == F.mul(sign, eval_poly(F, P.coeffs, F.neg(x)))


def test_printing():
    F = field_make(3)
    assert str(MonicPoly(F, (2, 1))) == "X - 1"
    assert str(MonicPoly(F, (1, 0, 1))) == "X^2 + 1"
    assert str(MonicPoly(F, (2, 2, 1))) == "X^2 - X - 1"
