"""Endo-parameters, wild parameters, the ramification maps between them, and
discrete Langlands parameter shapes for symplectic groups.

Galois-side objects are opaque: a ``Registry`` lists the endo-classes, the
squaring permutation, the wild-inertia orbit paired with each class, and the
irreducible representations available for building parameters.
"""

from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass, field
from math import isqrt

from .config import cardinality_bound
from .endo import TRIVIAL_LABEL, DualType, EndoClassInvariants, trivial_class
from .errors import (
    NoSolution,
    NotSelfDual,
    OddDegree,
    RegistryMissing,
    TooLarge,
    UnpairedLabel,
    ValidationError,
)

TRIVIAL_ORBIT = "gamma0"


# ---------------------------------------------------------------------------
# quadratic characters and parities


class QuadChar(enum.Enum):
    """The Klein four-group of quadratic characters of W_F, as (unramified bit, ramified bit)."""

    ONE = (0, 0)
    NR = (1, 0)
    RAM1 = (0, 1)
    RAM2 = (1, 1)

    def __mul__(self, other):
        return QuadChar((self.value[0] ^ other.value[0], self.value[1] ^ other.value[1]))

    def __pow__(self, n):
        return self if n % 2 else QuadChar.ONE

    @property
    def name_(self):
        return {QuadChar.ONE: "1", QuadChar.NR: "nr", QuadChar.RAM1: "ram1", QuadChar.RAM2: "ram2"}[self]

    @classmethod
    def parse(cls, s: str) -> QuadChar:
        for c in cls:
            if c.name_ == s:
                return c
        raise ValidationError(f"unknown quadratic character {s!r}")

    def __str__(self):
        return self.name_


QUAD_ORDER = (QuadChar.ONE, QuadChar.NR, QuadChar.RAM1, QuadChar.RAM2)


def quad_product(chars) -> QuadChar:
    out = QuadChar.ONE
    for c in chars:
        out = out * c
    return out


class Parity(enum.Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"

    def __str__(self):
        return self.value


def parity_of_block(m: int) -> Parity:
    """The parity sigma must have for sigma (x) St_m to be symplectic."""
    return Parity.SYMPLECTIC if m % 2 == 0 else Parity.ORTHOGONAL


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True, order=True)
class WildOrbit:
    label: str
    dim: int
    self_dual: bool
    paired_endo: str

    @property
    def is_trivial(self) -> bool:
        return self.label == TRIVIAL_ORBIT


@dataclass(frozen=True, order=True)
class IrrepDescriptor:
    inertial_id: str
    dim: int
    parity: Parity = field(compare=False)
    det: QuadChar = field(compare=False)
    orbit: str = field(compare=False)
    orbit_mult: int = field(compare=False)

    def __post_init__(self):
        if self.dim < 1 or self.orbit_mult < 1:
            raise ValidationError(f"{self.inertial_id}: dimensions must be positive")
        if self.dim % 2 and (self.parity is not Parity.ORTHOGONAL or self.dim != 1):
            raise ValidationError(f"{self.inertial_id}: odd-dimensional self-dual irreps are orthogonal characters")
        if self.parity is Parity.SYMPLECTIC and self.det is not QuadChar.ONE:
            raise ValidationError(f"{self.inertial_id}: symplectic irreps have trivial determinant")


@dataclass(frozen=True)
class Registry:
    endo: dict  # label -> EndoClassInvariants
    square: dict  # label -> label of the square
    orbits: dict  # orbit label -> WildOrbit
    irreps: tuple  # IrrepDescriptor, sorted

    def __post_init__(self):
        if TRIVIAL_LABEL not in self.endo or TRIVIAL_ORBIT not in self.orbits:
            raise ValidationError("a registry contains the trivial endo-class and the trivial orbit")
        if sorted(self.square) != sorted(self.endo) or sorted(self.square.values()) != sorted(self.endo):
            raise ValidationError("squaring must be a permutation of the registered endo-classes")
        for a, b in self.square.items():
            if _invariant_key(self.endo[a]) != _invariant_key(self.endo[b]):
                raise ValidationError(f"squaring {a} -> {b} changes invariants")
        if self.square[TRIVIAL_LABEL] != TRIVIAL_LABEL:
            raise ValidationError("the trivial class squares to itself")
        seen = set()
        for o in self.orbits.values():
            ec = self.endo.get(o.paired_endo)
            if ec is None:
                raise UnpairedLabel(f"orbit {o.label} is paired with unknown class {o.paired_endo}")
            if ec.degree != o.dim or ec.self_dual != o.self_dual:
                raise ValidationError(f"orbit {o.label} does not match class {ec.label}")
            if o.paired_endo in seen:
                raise ValidationError(f"class {o.paired_endo} is paired twice")
            seen.add(o.paired_endo)
            if o.dim == 1 and o.self_dual and not o.is_trivial:
                raise ValidationError("the only self-dual orbit of dimension 1 is the trivial one")
        if self.orbits[TRIVIAL_ORBIT].paired_endo != TRIVIAL_LABEL:
            raise ValidationError("the trivial orbit pairs with the trivial class")
        for r in self.irreps:
            if r.orbit not in self.orbits:
                raise UnpairedLabel(f"irrep {r.inertial_id} restricts to unknown orbit {r.orbit}")
            if r.dim != r.orbit_mult * self.orbits[r.orbit].dim:
                raise ValidationError(f"irrep {r.inertial_id} has the wrong dimension for its restriction")

    @property
    def orbit_of_endo(self) -> dict:
        return {o.paired_endo: o.label for o in self.orbits.values()}

    @property
    def unsquare(self) -> dict:
        return {b: a for a, b in self.square.items()}

    def irreps_for(self, orbit: str, mult: int, parity: Parity | None = None) -> list[IrrepDescriptor]:
        return [
            r for r in self.irreps if r.orbit == orbit and r.orbit_mult == mult and (parity is None or r.parity is parity)
        ]

    def quadratic_characters(self) -> dict:
        out = {}
        for r in self.irreps_for(TRIVIAL_ORBIT, 1):
            out[r.det] = r
        return out


def _invariant_key(ec: EndoClassInvariants):
    return (ec.degree, ec.e, ec.f, ec.dual_type, ec.self_dual)


def make_registry(endo_classes, square, orbits, irreps) -> Registry:
    return Registry(
        {e.label: e for e in endo_classes},
        dict(square),
        {o.label: o for o in orbits},
        tuple(sorted(irreps)),
    )


# ---------------------------------------------------------------------------
# endo-parameters and wild parameters


@dataclass(frozen=True)
class EndoParameter:
    terms: tuple  # ((EndoClassInvariants, mult), ...) sorted by label

    @property
    def degree(self) -> int:
        return sum(ec.degree * m for ec, m in self.terms)

    @property
    def self_dual(self) -> bool:
        return all(ec.self_dual for ec, _ in self.terms)

    def as_dict(self) -> dict:
        return {ec.label: m for ec, m in self.terms}


def endoparam_make(terms) -> EndoParameter:
    """From a mapping or iterable of (EndoClassInvariants, multiplicity); multiplicities add."""
    items = terms.items() if hasattr(terms, "items") else terms
    acc: dict = {}
    for ec, m in items:
        if m < 0:
            raise ValidationError(f"negative multiplicity {m} at {ec.label}")
        if m:
            acc[ec] = acc.get(ec, 0) + m
    return EndoParameter(tuple(sorted(acc.items(), key=lambda kv: kv[0].label)))


def endoparam_degree(terms) -> int:
    return endoparam_make(terms).degree


def _relabel(ep: EndoParameter, table: dict, reg: Registry) -> EndoParameter:
    out = []
    for ec, m in ep.terms:
        if ec.label not in table:
            raise UnpairedLabel(f"{ec.label} is not in the registry")
        out.append((reg.endo[table[ec.label]], m))
    return endoparam_make(out)


def endoparam_square(ep: EndoParameter, reg: Registry) -> EndoParameter:
    return _relabel(ep, reg.square, reg)


def endoparam_unsquare(ep: EndoParameter, reg: Registry) -> EndoParameter:
    return _relabel(ep, reg.unsquare, reg)


def iota_2N(ep: EndoParameter, reg: Registry) -> EndoParameter:
    if not ep.self_dual:
        raise NotSelfDual("iota_2N needs a self-dual endo-parameter")
    if ep.degree % 2:
        raise OddDegree(f"iota_2N needs even degree, got {ep.degree}")
    sq = endoparam_square(ep, reg)
    return endoparam_make(list(sq.terms) + [(reg.endo[TRIVIAL_LABEL], 1)])


@dataclass(frozen=True)
class WildParameter:
    terms: tuple  # ((WildOrbit, mult), ...) sorted by label

    @property
    def dim(self) -> int:
        return sum(o.dim * m for o, m in self.terms)

    @property
    def discrete_self_dual(self) -> bool:
        return all(o.self_dual for o, _ in self.terms)

    def mult(self, label: str) -> int:
        for o, m in self.terms:
            if o.label == label:
                return m
        return 0

    def as_dict(self) -> dict:
        return {o.label: m for o, m in self.terms}


def wildparam_make(terms) -> WildParameter:
    items = terms.items() if hasattr(terms, "items") else terms
    acc: dict = {}
    for o, m in items:
        acc[o] = acc.get(o, 0) + m
    for o, m in acc.items():
        if m < 0:
            raise ValidationError(f"negative multiplicity {m} at {o.label}")
    return WildParameter(tuple(sorted(((o, m) for o, m in acc.items() if m), key=lambda kv: kv[0].label)))


def ramification_gl(ep: EndoParameter, reg: Registry) -> WildParameter:
    table = reg.orbit_of_endo
    out = []
    for ec, m in ep.terms:
        if ec.label not in table:
            raise UnpairedLabel(f"{ec.label} has no paired orbit")
        out.append((reg.orbits[table[ec.label]], m))
    return wildparam_make(out)


def ramification_gl_inverse(wp: WildParameter, reg: Registry) -> EndoParameter:
    out = []
    for o, m in wp.terms:
        if o.paired_endo not in reg.endo:
            raise UnpairedLabel(f"orbit {o.label} has no paired class")
        out.append((reg.endo[o.paired_endo], m))
    return endoparam_make(out)


def increment_trivial(wp: WildParameter, reg: Registry, by: int = 1) -> WildParameter:
    return wildparam_make(list(wp.terms) + [(reg.orbits[TRIVIAL_ORBIT], by)])


def ramification_sp(ep: EndoParameter, reg: Registry) -> WildParameter:
    """1 + sum of m [gamma(Theta^2)], built term by term."""
    if not ep.self_dual:
        raise NotSelfDual("ramification_sp needs a self-dual endo-parameter")
    if ep.degree % 2:
        raise OddDegree(f"ramification_sp needs even degree, got {ep.degree}")
    table = reg.orbit_of_endo
    out = [(reg.orbits[TRIVIAL_ORBIT], 1)]
    for ec, m in ep.terms:
        sq = reg.square.get(ec.label)
        if sq is None or sq not in table:
            raise UnpairedLabel(f"{ec.label} has no square or no paired orbit")
        out.append((reg.orbits[table[sq]], m))
    return wildparam_make(out)


def ramification_sp_inverse(wp: WildParameter, reg: Registry) -> EndoParameter:
    if not wp.discrete_self_dual:
        raise NotSelfDual("not a discrete self-dual wild parameter")
    if wp.dim % 2 == 0 or wp.mult(TRIVIAL_ORBIT) < 1:
        raise ValidationError("a symplectic wild parameter has odd dimension")
    rest = increment_trivial(wp, reg, -1)
    return endoparam_unsquare(ramification_gl_inverse(rest, reg), reg)


# ---------------------------------------------------------------------------
# parameter shapes


@dataclass(frozen=True, order=True)
class Block:
    irrep: IrrepDescriptor
    m: int


@dataclass(frozen=True)
class LParamShape:
    blocks: tuple  # Block, sorted; repeats are kept so validation can see them

    @classmethod
    def of(cls, blocks) -> LParamShape:
        return cls(tuple(sorted(Block(r, m) for r, m in blocks)))

    @property
    def dim(self) -> int:
        return sum(b.m * b.irrep.dim for b in self.blocks)

    def irreps(self) -> list[IrrepDescriptor]:
        return sorted({b.irrep for b in self.blocks})

    def __str__(self):
        parts = []
        for b in self.blocks:
            parts.append(b.irrep.inertial_id + (f"(x)St{b.m}" if b.m > 1 else ""))
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class DiscreteReport:
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_discrete(shape: LParamShape, N: int) -> DiscreteReport:
    bad = []
    counts = Counter(shape.blocks)
    if any(c > 1 for c in counts.values()):
        bad.append("multiplicity: a block occurs more than once")
    if shape.dim != 2 * N + 1:
        bad.append(f"dimension: sum of m*dim is {shape.dim}, expected {2 * N + 1}")
    for b in counts:
        if b.irrep.parity is not parity_of_block(b.m):
            bad.append(f"parity: {b.irrep.inertial_id} is {b.irrep.parity} but m={b.m}")
    det = quad_product(b.irrep.det**b.m for b in shape.blocks)
    if det is not QuadChar.ONE:
        bad.append(f"determinant: product of det^m is {det}")
    return DiscreteReport(tuple(bad))


def is_cuspidal(shape: LParamShape) -> bool:
    present = {(b.irrep, b.m) for b in shape.blocks}
    return all(b.m <= 2 or (b.irrep, b.m - 2) in present for b in shape.blocks)


def is_regular(shape: LParamShape) -> bool:
    return all(b.m == 1 and b.irrep.parity is Parity.ORTHOGONAL for b in shape.blocks)


def packet_counts(shape: LParamShape) -> tuple[int, int | None]:
    """(2^(#I-1), 2^(#I0-1)); I0 counts distinct orthogonal sigma. Second entry is None unless cuspidal."""
    size = 2 ** (len(shape.blocks) - 1)
    if not is_cuspidal(shape):
        return size, None
    orth = {b.irrep for b in shape.blocks if b.irrep.parity is Parity.ORTHOGONAL}
    return size, 2 ** (len(orth) - 1)


def restriction(shape: LParamShape, reg: Registry) -> WildParameter:
    return wildparam_make([(reg.orbits[b.irrep.orbit], b.m * b.irrep.orbit_mult) for b in shape.blocks])


def _ladder(irrep: IrrepDescriptor, k: int) -> list[tuple[IrrepDescriptor, int]]:
    start = 1 if irrep.parity is Parity.ORTHOGONAL else 2
    return [(irrep, start + 2 * j) for j in range(k)]


def enumerate_cuspidal_shapes(N: int, inventory, wild: WildParameter | None = None, reg: Registry | None = None,
                              bound: int | None = None) -> list[LParamShape]:
    """All discrete cuspidal shapes of dimension 2N+1 over the inventory.

    A cuspidal shape takes, for each sigma, a full ladder 1,3,..,2k-1
    (orthogonal) or 2,4,..,2k (symplectic). With ``wild`` (and ``reg``) given,
    only shapes restricting to it are produced.
    """
    bound = cardinality_bound() if bound is None else bound
    irreps = sorted(set(inventory))
    target = 2 * N + 1
    if wild is not None:
        budget0 = wild.as_dict()
        irreps = [r for r in irreps if r.orbit in budget0]
    else:
        budget0 = None
    out = []

    def ladder_cost(r, k):
        # total of m over the ladder
        return k * k if r.parity is Parity.ORTHOGONAL else k * (k + 1)

    def rec(i, remaining, budget, det, chosen):
        if remaining == 0 and (budget is None or not any(budget.values())):
            if det is QuadChar.ONE:
                out.append(LParamShape.of(chosen))
                if len(out) > bound:
                    raise TooLarge(f"more than {bound} shapes")
            return
        if i == len(irreps):
            return
        r = irreps[i]
        rec(i + 1, remaining, budget, det, chosen)
        k = 1
        while True:
            cost = ladder_cost(r, k)
            if cost * r.dim > remaining:
                break
            if budget is not None and cost * r.orbit_mult > budget.get(r.orbit, 0):
                break
            nb = None
            if budget is not None:
                nb = dict(budget)
                nb[r.orbit] -= cost * r.orbit_mult
            d = det * (r.det**cost)
            rec(i + 1, remaining - cost * r.dim, nb, d, chosen + _ladder(r, k))
            k += 1

    rec(0, target, budget0, QuadChar.ONE, [])
    return sorted(out, key=lambda s: [(b.irrep.inertial_id, b.m) for b in s.blocks])


# ---------------------------------------------------------------------------
# four squares and the regular recipe


def four_squares_nontrivial(m: int) -> tuple[int, int, int, int]:
    """Lexicographically smallest (a1>=a2 even, a3>=a4 odd) with a1^2+..+a4^2 = 4m+2."""
    n = 4 * m + 2
    for a1 in range(0, isqrt(n) + 1, 2):
        for a2 in range(0, a1 + 1, 2):
            for a3 in range(1, isqrt(n) + 1, 2):
                rest = n - a1 * a1 - a2 * a2 - a3 * a3
                if rest < 1:
                    continue
                a4 = isqrt(rest)
                if a4 * a4 == rest and a4 % 2 == 1 and a4 <= a3:
                    return (a1, a2, a3, a4)
    raise NoSolution(f"no four-squares decomposition of {n}")


def four_squares_trivial(m0: int) -> tuple[int, int, int, int]:
    """Lexicographically smallest (a1, a2>=a3>=a4) with sum of squares m0 and a1 the only one of its parity."""
    for a1 in range(isqrt(m0) + 1):
        for a2 in range(isqrt(m0) + 1):
            for a3 in range(a2 + 1):
                rest = m0 - a1 * a1 - a2 * a2 - a3 * a3
                if rest < 0:
                    continue
                a4 = isqrt(rest)
                if a4 * a4 != rest or a4 > a3:
                    continue
                others = {a2 % 2, a3 % 2, a4 % 2}
                if others == {1 - a1 % 2}:
                    return (a1, a2, a3, a4)
    raise NoSolution(f"no admissible decomposition of {m0}")


def _canonical_quadruple(reg: Registry, orbit: str) -> list[IrrepDescriptor]:
    orth = reg.irreps_for(orbit, 1, Parity.ORTHOGONAL)
    symp = reg.irreps_for(orbit, 1, Parity.SYMPLECTIC)
    if len(orth) < 2 or len(symp) < 2:
        raise RegistryMissing(f"orbit {orbit} lacks two orthogonal and two symplectic irreps")
    return orth[:2] + symp[:2]


def four_squares_shape(wp: WildParameter, reg: Registry) -> LParamShape:
    if not wp.discrete_self_dual or wp.dim % 2 == 0:
        raise ValidationError("four_squares_shape needs a discrete self-dual wild parameter of odd dimension")
    blocks = []
    for o, m in wp.terms:
        if o.is_trivial:
            continue
        a = (0, 0, 3, 1) if m == 2 else four_squares_nontrivial(m)
        for sigma, ai in zip(_canonical_quadruple(reg, o.label), a):
            blocks.extend((sigma, j) for j in range(ai - 1, 0, -2))
    det = quad_product(b[0].det ** b[1] for b in blocks)
    m0 = wp.mult(TRIVIAL_ORBIT)
    quads = reg.quadratic_characters()
    if len(quads) < 4:
        raise RegistryMissing("the registry lacks the four quadratic characters")
    omegas = [det] + [c for c in QUAD_ORDER if c is not det]
    for w, ai in zip(omegas, four_squares_trivial(m0)):
        blocks.extend((quads[w], 2 * j - 1) for j in range(ai, 0, -1))
    shape = LParamShape.of(blocks)
    if not validate_discrete(shape, (wp.dim - 1) // 2).ok or restriction(shape, reg) != wp:
        raise NoSolution(f"four-squares construction failed for {wp.as_dict()}")
    return shape


def _regular_split(dual_type: DualType, m: int) -> list[int]:
    if dual_type is DualType.UNRAMIFIED:
        return [m] if m % 2 else [m - 1, 1]
    if m % 2 == 0 or m == 1:
        return [m]
    return [m - 1, 1]


def regular_shape(wp: WildParameter, reg: Registry) -> LParamShape:
    """A regular (all m=1, all orthogonal) shape restricting to wp."""
    if not wp.discrete_self_dual or wp.dim % 2 == 0:
        raise ValidationError("regular_shape needs a discrete self-dual wild parameter of odd dimension")
    chosen = []
    for o, m in wp.terms:
        if o.is_trivial:
            continue
        parts = _regular_split(reg.endo[o.paired_endo].dual_type, m)
        used = set()
        for mi in parts:
            pool = [r for r in reg.irreps_for(o.label, mi, Parity.ORTHOGONAL) if r not in used]
            if not pool:
                raise RegistryMissing(f"no orthogonal irrep over {o.label} with multiplicity {mi}")
            used.add(pool[0])
            chosen.append(pool[0])
    m0 = wp.mult(TRIVIAL_ORBIT)
    if m0 > 1:
        pool = reg.irreps_for(TRIVIAL_ORBIT, m0 - 1, Parity.ORTHOGONAL)
        if not pool:
            raise RegistryMissing(f"no orthogonal depth-zero irrep of dimension {m0 - 1}")
        chosen.append(pool[0])
    omega = quad_product(r.det for r in chosen)
    quads = reg.quadratic_characters()
    if omega not in quads:
        raise RegistryMissing(f"quadratic character {omega} missing")
    chosen.append(quads[omega])
    return LParamShape.of((r, 1) for r in chosen)


# ---------------------------------------------------------------------------
# parities of self-dual cuspidals


@dataclass(frozen=True)
class GaloisDescriptor:
    tame: bool
    d: int = 1
    K_over_Ktilde_ramified: bool = False
    alpha_ramified: bool = False


@dataclass(frozen=True)
class ParityDecision:
    same: bool
    parity: Parity | None = None

    def __str__(self):
        return f"SameParity({self.parity})" if self.same else "OppositeParity"


def parity_decision(g: GaloisDescriptor) -> ParityDecision:
    if g.tame:
        return ParityDecision(False)
    if g.K_over_Ktilde_ramified and g.d == 1:
        return ParityDecision(True, Parity.SYMPLECTIC if g.alpha_ramified else Parity.ORTHOGONAL)
    return ParityDecision(False)


def block_candidates(decision: ParityDecision, m: int) -> tuple[str, ...]:
    """Which of the two inertially equivalent self-dual members (rho, rho') may carry a block of size m.

    With opposite parities exactly one member fits; which one is not
    determined here. With equal parities both fit or neither does.
    """
    need = parity_of_block(m)
    if not decision.same:
        return (f"the {need} member",)
    return ("rho", "rho'") if decision.parity is need else ()


def existence_table(dual_type: DualType, m: int) -> bool:
    if m < 1:
        raise ValidationError(f"m must be >= 1, got {m}")
    if dual_type is DualType.UNRAMIFIED:
        return m % 2 == 1
    if dual_type is DualType.RAMIFIED:
        return m == 1 or m % 2 == 0
    return m == 1 or m % 2 == 0


def parities_available(dual_type: DualType, m: int) -> set:
    """Parities of the self-dual irreps of relative degree m: both, except the four orthogonal quadratic characters."""
    if not existence_table(dual_type, m):
        return set()
    if dual_type is DualType.TRIVIAL and m == 1:
        return {Parity.ORTHOGONAL}
    return {Parity.ORTHOGONAL, Parity.SYMPLECTIC}


# ---------------------------------------------------------------------------
# synthetic registries


_SELF_DUAL_SHAPES = [
    (2, 2, 1, DualType.RAMIFIED),
    (2, 1, 2, DualType.UNRAMIFIED),
    (4, 4, 1, DualType.RAMIFIED),
    (4, 2, 2, DualType.RAMIFIED),
    (4, 1, 4, DualType.UNRAMIFIED),
    (4, 2, 2, DualType.UNRAMIFIED),
]
_OTHER_SHAPES = [(1, 1, 1), (2, 2, 1), (2, 1, 2), (3, 3, 1), (3, 1, 3)]


def synthetic_registry(n_classes: int = 50, seed: int = 0, max_irrep_dim: int = 15,
                       self_dual_fraction: float = 0.7, max_degree: int = 4) -> Registry:
    """A registry with ``n_classes`` endo-classes (the trivial one included).

    Squaring permutes classes with identical invariants. Each self-dual class
    gets, for every admissible relative degree m with m*deg <= max_irrep_dim,
    two orthogonal and two symplectic irreps; the trivial class gets the four
    quadratic characters at m=1.
    """
    rng = random.Random(seed)
    sd_shapes = [s for s in _SELF_DUAL_SHAPES if s[0] <= max_degree]
    other_shapes = [s for s in _OTHER_SHAPES if s[0] <= max_degree]
    classes = [trivial_class()]
    for i in range(1, n_classes):
        if rng.random() < self_dual_fraction or not other_shapes:
            deg, e, f, dt = sd_shapes[i % len(sd_shapes)] if i <= len(sd_shapes) else rng.choice(sd_shapes)
            classes.append(EndoClassInvariants(f"T{i}", deg, e, f, dt))
        else:
            deg, e, f = rng.choice(other_shapes)
            classes.append(EndoClassInvariants(f"T{i}", deg, e, f, None, self_dual=False))
    groups: dict = {}
    for ec in classes:
        groups.setdefault(_invariant_key(ec), []).append(ec.label)
    square = {}
    for labels in groups.values():
        image = list(labels)
        if TRIVIAL_LABEL not in labels:
            rng.shuffle(image)
        square.update(zip(labels, image))
    orbits = []
    for ec in classes:
        label = TRIVIAL_ORBIT if ec.is_trivial else f"gamma({ec.label})"
        orbits.append(WildOrbit(label, ec.degree, ec.self_dual, ec.label))
    irreps = []
    nontriv = [QuadChar.NR, QuadChar.RAM1, QuadChar.RAM2, QuadChar.ONE]
    for ec, o in zip(classes, orbits):
        if not ec.self_dual:
            continue
        for m in range(1, max_irrep_dim // ec.degree + 1):
            pars = parities_available(ec.dual_type, m)
            if not pars:
                continue
            if ec.is_trivial and m == 1:
                for c in QUAD_ORDER:
                    irreps.append(IrrepDescriptor(f"omega_{c}", 1, Parity.ORTHOGONAL, c, o.label, 1))
                continue
            for j in range(2):
                det = rng.choice(nontriv)
                irreps.append(IrrepDescriptor(f"{ec.label}.m{m}.O{j}", m * ec.degree, Parity.ORTHOGONAL, det, o.label, m))
            for j in range(2):
                irreps.append(
                    IrrepDescriptor(f"{ec.label}.m{m}.S{j}", m * ec.degree, Parity.SYMPLECTIC, QuadChar.ONE, o.label, m)
                )
    return make_registry(classes, square, orbits, irreps)


def quadratic_inventory() -> list[IrrepDescriptor]:
    return [IrrepDescriptor(f"omega_{c}", 1, Parity.ORTHOGONAL, c, TRIVIAL_ORBIT, 1) for c in QUAD_ORDER]


def wild_parameters_up_to(reg: Registry, max_dim: int, self_dual_only: bool = True) -> list[WildParameter]:
    """All discrete self-dual wild parameters of odd dimension <= max_dim over the registry's orbits."""
    nontrivial = sorted(o for o in reg.orbits.values() if not o.is_trivial and (o.self_dual or not self_dual_only))
    triv = reg.orbits[TRIVIAL_ORBIT]
    out = []

    def rec(i, room, acc):
        if i == len(nontrivial):
            used = max_dim - room
            for m0 in range(1, room + 1):
                if (used + m0) % 2 == 1:
                    out.append(wildparam_make(acc + [(triv, m0)]))
            return
        o = nontrivial[i]
        for m in range(0, room // o.dim + 1):
            rec(i + 1, room - m * o.dim, acc + ([(o, m)] if m else []))

    rec(0, max_dim, [])
    return out


def self_dual_endoparams(reg: Registry, max_degree: int) -> list[EndoParameter]:
    """All self-dual endo-parameters over the registry's nontrivial self-dual classes, degree <= max_degree (even)."""
    classes = sorted((ec for ec in reg.endo.values() if ec.self_dual and not ec.is_trivial), key=lambda e: e.label)
    out = []

    def rec(i, room, acc):
        if i == len(classes):
            out.append(endoparam_make(acc))
            return
        ec = classes[i]
        for m in range(0, room // ec.degree + 1):
            rec(i + 1, room - m * ec.degree, acc + ([(ec, m)] if m else []))

    rec(0, max_degree, [])
    return out
