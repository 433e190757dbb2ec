"""Finite fields of odd characteristic and self-dual irreducible polynomials.

Field elements are encoded as integers in ``range(q)``: the base-p digits of a
code are the coefficients (constant term first) of the element written in the
polynomial basis over the prime field. For a prime field the code is simply
the residue. Multiplication and addition go through exp/log and Zech tables,
built once per (p, k) and cached.

A polynomial is a tuple of codes in ascending degree. ``MonicPoly`` wraps such
a tuple together with its field; ``SelfDualPoly`` additionally carries the
duality context and is checked on construction.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from sympy import factorint, isprime

from .config import cardinality_bound
from .errors import (
    EvenCharacteristic,
    NonPrime,
    NotSelfDual,
    TooLarge,
    ValidationError,
    ZeroConstantTerm,
)


# ---------------------------------------------------------------------------
# fields


class FiniteField:
    """GF(p^k) with integer element codes. Build through ``field_make``."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._prime = k == 1
        if not self._prime:
            self._build_tables()

    # equality is by (p, k): the modulus is a function of them
    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash(("GF", self.p, self.k))

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (field_make, (self.p, self.k, self.q))

    def __iter__(self):
        return iter(range(self.q))

    def __len__(self):
        return self.q

    # -- table construction (k > 1 only)

    def _vec(self, code):
        p = self.p
        out = []
        for _ in range(self.k):
            code, r = divmod(code, p)
            out.append(r)
        return out

    def _code(self, vec):
        c = 0
        for d in reversed(vec):
            c = c * self.p + d
        return c

    def _vmul(self, a, b):
        # product of two digit vectors modulo the field modulus
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top]
            if c:
                for j in range(k + 1):
                    prod[top - k + j] = (prod[top - k + j] - c * mod[j]) % p
        return prod[:k]

    def _vpow(self, a, n):
        result = [1] + [0] * (self.k - 1)
        base = a
        while n:
            if n & 1:
                result = self._vmul(result, base)
            base = self._vmul(base, base)
            n >>= 1
        return result

    def _build_tables(self):
        q, one = self.q, [1] + [0] * (self.k - 1)
        order = q - 1
        cofactors = [order // r for r in factorint(order)]
        gen = None
        for code in range(2, q):
            v = self._vec(code)
            if all(self._vpow(v, c) != one for c in cofactors):
                gen = v
                break
        exp = [0] * order
        log = [0] * q
        cur = one
        for n in range(order):
            c = self._code(cur)
            exp[n] = c
            log[c] = n
            cur = self._vmul(cur, gen)
        p = self.p
        zech = [None] * order
        for n in range(order):
            c = exp[n]
            d0 = c % p
            s = c - d0 + (d0 + 1) % p  # code of 1 + g^n
            zech[n] = None if s == 0 else log[s]
        self._exp, self._log, self._zech = exp, log, zech
        self._minus_one = exp[order // 2]

    # -- arithmetic on codes

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        if self._prime:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        order = self.q - 1
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % order]
        return 0 if z is None else self._exp[(la + z) % order]

    def neg(self, a):
        if self._prime:
            return (-a) % self.p
        return self.mul(a, self._minus_one)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._prime:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._prime:
            return pow(a, -1, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a, n):
        if a == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        if self._prime:
            return pow(a, n, self.p)
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def fmt(self, a) -> str:
        return str(a) if self._prime else f"[{a}]"


def _check_bound(size, bound, what):
    bound = cardinality_bound() if bound is None else bound
    if size > bound:
        raise TooLarge(f"{what} has size {size}, above the bound {bound}")


def field_make(p: int, k: int = 1, bound: int | None = None) -> FiniteField:
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if p < 2 or not isprime(p):
        raise NonPrime(f"{p} is not prime")
    if k < 1:
        raise ValidationError(f"extension degree must be >= 1, got {k}")
    _check_bound(p**k, bound, f"GF({p}^{k})")
    return _field_cached(p, k)


@lru_cache(maxsize=None)
def _field_cached(p, k):
    if k == 1:
        return FiniteField(p, 1, (0, 1))
    fp = _field_cached(p, 1)
    for low in itertools.product(range(p), repeat=k):
        cand = tuple(low) + (1,)
        if cand[0] != 0 and is_irreducible(MonicPoly(fp, cand)):
            return FiniteField(p, k, cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def field_from_cardinality(q: int, bound: int | None = None) -> FiniteField:
    fac = factorint(q)
    if len(fac) != 1:
        raise NonPrime(f"{q} is not a prime power")
    ((p, k),) = fac.items()
    return field_make(p, k, bound)


# ---------------------------------------------------------------------------
# raw polynomial arithmetic on coefficient tuples (ascending degree)


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def p_sub(F, a, b):
    n = max(len(a), len(b))
    out = [F.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def p_mul(F, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(out)


def p_divmod(F, a, b):
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(_trim(a))
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    if len(r) - 1 < db:
        return (), tuple(r)
    quo = [0] * (len(r) - db)
    for top in range(len(r) - 1, db - 1, -1):
        c = r[top]
        if c:
            c = F.mul(c, lead_inv)
            quo[top - db] = c
            for j in range(db + 1):
                r[top - db + j] = F.sub(r[top - db + j], F.mul(c, b[j]))
    return _trim(quo), _trim(r[:db])


def p_mod(F, a, b):
    return p_divmod(F, a, b)[1]


def p_powmod(F, base, n, mod):
    result = (1,)
    base = p_mod(F, base, mod)
    while n:
        if n & 1:
            result = p_mod(F, p_mul(F, result, base), mod)
        base = p_mod(F, p_mul(F, base, base), mod)
        n >>= 1
    return result


def p_gcd(F, a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, p_mod(F, a, b)
    if a:
        lead = F.inv(a[-1])
        a = tuple(F.mul(c, lead) for c in a)
    return a


def monic_polys(F, degree, nonzero_constant=False):
    """All monic polynomials of the given degree, canonical order."""
    lows = range(1, F.q) if nonzero_constant else range(F.q)
    for c0 in lows:
        for rest in itertools.product(range(F.q), repeat=degree - 1):
            yield (c0,) + rest + (1,)


# ---------------------------------------------------------------------------
# polynomial types


@dataclass(frozen=True)
class MonicPoly:
    field: FiniteField
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", c)
        if len(c) < 2:
            raise ValidationError("a monic polynomial needs degree >= 1")
        if c[-1] != 1:
            raise ValidationError(f"leading coefficient must be 1, got {c[-1]}")
        if any(not (0 <= x < self.field.q) for x in c):
            raise ValidationError(f"coefficient out of range for {self.field!r}: {c}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant(self) -> int:
        return self.coeffs[0]

    def sort_key(self):
        return (self.degree, self.coeffs)

    def __str__(self):
        F = self.field
        out = ""
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if F.k == 1:
                v = c if c <= F.p // 2 else c - F.p
                sign, mag = ("-" if v < 0 else "+"), abs(v)
                coef = "" if (mag == 1 and mono) else str(mag)
            else:
                sign, coef = "+", ("" if (c == 1 and mono) else F.fmt(c))
            body = coef + ("*" if coef and mono else "") + mono
            out += (f" {sign} " if out else ("-" if sign == "-" else "")) + body
        return out


def is_irreducible(Q: MonicPoly) -> bool:
    """Rabin's test: X^(q^n) = X mod Q, and gcd(X^(q^(n/r)) - X, Q) = 1 for primes r | n."""
    n = Q.degree
    if n == 1:
        return True
    if Q.constant == 0:
        return False
    return _rabin(Q.field, Q.coeffs)


@lru_cache(maxsize=65536)
def _rabin(F, f):
    n = len(f) - 1
    x = (0, 1)
    frob = [p_mod(F, x, f)]
    for _ in range(n):
        frob.append(p_powmod(F, frob[-1], F.q, f))
    if p_sub(F, frob[n], x) != ():
        return False
    for r in factorint(n):
        g = p_gcd(F, p_sub(F, frob[n // r], x), f)
        if len(g) > 1:
            return False
    return True


def is_irreducible_trial(Q: MonicPoly) -> bool:
    """Irreducibility by exhaustive trial division over all monic factors of degree <= n/2."""
    F = Q.field
    for d in range(1, Q.degree // 2 + 1):
        for g in monic_polys(F, d):
            if p_mod(F, Q.coeffs, g) == ():
                return False
    return True


# ---------------------------------------------------------------------------
# duality


@dataclass(frozen=True)
class DualityContext:
    field: FiniteField
    index: int
    _bar: tuple = field(init=False, compare=False, repr=False, hash=False)

    def __post_init__(self):
        F = self.field
        if self.index not in (1, 2):
            raise ValidationError(f"fixed subfield index must be 1 or 2, got {self.index}")
        if self.index == 2:
            if F.k % 2:
                raise ValidationError(f"index 2 needs an even extension degree, {F!r} has k={F.k}")
            e = F.p ** (F.k // 2)
            bar = tuple(F.pow(a, e) for a in range(F.q))
        else:
            bar = tuple(range(F.q))
        object.__setattr__(self, "_bar", bar)

    @property
    def q(self) -> int:
        return self.field.q

    def bar(self, a: int) -> int:
        return self._bar[a]

    def __repr__(self):
        return f"DualityContext({self.field!r}, index={self.index})"


def context_make(q_E: int, index: int, bound: int | None = None) -> DualityContext:
    return DualityContext(field_from_cardinality(q_E, bound), index)


def _dual_coeffs(ctx, c):
    F = ctx.field
    if c[0] == 0:
        raise ZeroConstantTerm("dual needs a nonzero constant term")
    scale = F.inv(ctx.bar(c[0]))
    return tuple(F.mul(scale, ctx.bar(x)) for x in reversed(c))


def poly_dual(Q: MonicPoly, ctx: DualityContext) -> MonicPoly:
    if Q.field != ctx.field:
        raise ValidationError(f"polynomial over {Q.field!r} used with {ctx!r}")
    return MonicPoly(Q.field, _dual_coeffs(ctx, Q.coeffs))


class Involution(enum.Enum):
    IDENTITY = "identity"
    NEGATE = "negate"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SelfDualPoly:
    poly: MonicPoly
    ctx: DualityContext

    def __post_init__(self):
        if self.poly.field != self.ctx.field:
            raise ValidationError(f"polynomial over {self.poly.field!r} used with {self.ctx!r}")
        c = self.poly.coeffs
        if c[0] == 0:
            raise ZeroConstantTerm(f"{self.poly} has zero constant term")
        if _dual_coeffs(self.ctx, c) != c:
            raise NotSelfDual(f"{self.poly} is not self-dual for {self.ctx!r}")
        if not is_irreducible(self.poly):
            raise NotSelfDual(f"{self.poly} is not irreducible")

    @classmethod
    def of(cls, ctx: DualityContext, coeffs) -> SelfDualPoly:
        return cls(MonicPoly(ctx.field, tuple(coeffs)), ctx)

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.poly.coeffs

    def sort_key(self):
        return self.poly.sort_key()

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return str(self.poly)


def x_minus_one(ctx: DualityContext) -> SelfDualPoly:
    return SelfDualPoly.of(ctx, (ctx.field.neg(1), 1))


def x_plus_one(ctx: DualityContext) -> SelfDualPoly:
    return SelfDualPoly.of(ctx, (1, 1))


def sign_of_unipotent_pole(Q: SelfDualPoly) -> int | None:
    """+1 for X-1, -1 for X+1, None otherwise (index-1 contexts only)."""
    if Q.ctx.index != 1 or Q.degree != 1:
        return None
    return +1 if Q.coeffs[0] == Q.ctx.field.neg(1) else -1


def enumerate_self_dual_irreducible(ctx: DualityContext, m: int, bound: int | None = None) -> list[SelfDualPoly]:
    """All monic irreducible self-dual polynomials of degree m, canonical order.

    Candidates are built directly from the self-duality equations
    c_i = bar(c_{m-i}) / bar(c_0), so only about q^(m/2) of them are tested.
    """
    if m < 1:
        raise ValidationError(f"degree must be >= 1, got {m}")
    _check_bound(ctx.q**m, bound, f"degree-{m} enumeration over {ctx.field!r}")
    F, bar = ctx.field, ctx.bar
    consts = [c for c in range(1, F.q) if F.mul(c, bar(c)) == 1]
    free = [i for i in range(1, m) if i < m - i]
    middle = m // 2 if m % 2 == 0 and m >= 2 else None
    out = []
    for c0 in consts:
        s = F.inv(bar(c0))
        mids = [None]
        if middle is not None:
            mids = [x for x in range(F.q) if F.mul(bar(x), s) == x]
        for vals in itertools.product(range(F.q), repeat=len(free)):
            for mid in mids:
                c = [0] * (m + 1)
                c[0], c[m] = c0, 1
                for i, v in zip(free, vals):
                    c[i] = v
                    c[m - i] = F.mul(bar(v), s)
                if mid is not None:
                    c[middle] = mid
                c = tuple(c)
                if is_irreducible(MonicPoly(F, c)):
                    out.append(c)
    out.sort()
    return [SelfDualPoly.of(ctx, c) for c in out]


def apply_involution(sig: Involution, Q: SelfDualPoly) -> SelfDualPoly:
    if sig is Involution.IDENTITY:
        return Q
    F, m = Q.ctx.field, Q.degree
    c = tuple(x if (m - i) % 2 == 0 else F.neg(x) for i, x in enumerate(Q.coeffs))
    return SelfDualPoly.of(Q.ctx, c)
