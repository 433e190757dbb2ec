"""The inertial Jordan set of a simple cuspidal descriptor, its counting
identity, and the disjoint-union composition for general cuspidals.

A descriptor fixes an endo-class Theta (through its invariants), the base
field size q, N, and a pair of finite cuspidal data tau^(0), tau^(1) for the
two factors of the reductive quotient, plus the involutions sigma_m^(t).
For every self-dual Q in the twisted supports we get Hecke parameters
r0, r1, real parts, and a ladder of Jordan blocks for the class [rho_Q].
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from types import MappingProxyType

from .endo import DualType, EndoClassInvariants, trivial_class
from .errors import (
    DescriptorError,
    DimensionMismatch,
    DuplicateEndoClass,
    IdentityViolation,
    InvariantViolation,
    NonHalfInteger,
)
from .ffpoly import DualityContext, Involution, SelfDualPoly, apply_involution, context_make, x_minus_one
from .hecke import HeckeParams, hecke_params, reducibility_real_parts
from .lusztig import CuspidalDatum, GroupKind, GroupType, datum_validate


# ---------------------------------------------------------------------------
# blocks from real parts


def jordan_blocks_from_real_part(s) -> list[int]:
    s = Fraction(s)
    if (2 * s).denominator != 1 or s < 0:
        raise NonHalfInteger(f"{s} is not a non-negative half-integer")
    top = int(2 * s) - 1
    return list(range(top, 0, -2))


def inertial_contribution(r0, r1, t_rho: int) -> int:
    """floor((r0^2 + r1^2) / 2t^2), checked against the block ladders of both real parts."""
    r0, r1 = Fraction(r0), Fraction(r1)
    value = floor((r0 * r0 + r1 * r1) / (2 * t_rho * t_rho))
    ladders = sum(sum(jordan_blocks_from_real_part(s)) for s in reducibility_real_parts(r0, r1, t_rho))
    if value != ladders:
        raise InvariantViolation(f"contribution {value} != block total {ladders} for r=({r0},{r1}), t={t_rho}")
    return value


# ---------------------------------------------------------------------------
# descriptors


def descriptor_context(q: int, endo: EndoClassInvariants) -> DualityContext:
    """k_Theta of cardinality q^f, with index 2 exactly when E/E0 is unramified."""
    index = 2 if endo.dual_type is DualType.UNRAMIFIED else 1
    return context_make(q**endo.f, index)


@dataclass(frozen=True)
class SimpleCuspidalDescriptor:
    q: int
    endo: EndoClassInvariants
    N: int
    data: tuple  # (CuspidalDatum, CuspidalDatum)
    involutions: MappingProxyType = field(default_factory=lambda: MappingProxyType({}))
    chi_twist: bool = False

    def __hash__(self):
        return hash((self.q, self.endo, self.N, self.data, tuple(sorted(self.involutions.items(), key=_inv_key))))

    @property
    def f(self) -> int:
        return self.endo.f

    @property
    def degree(self) -> int:
        return self.endo.degree

    @property
    def dim_E_V(self) -> int:
        return 2 * self.N // self.degree

    @property
    def ctx(self) -> DualityContext:
        return self.data[0].ctx

    @property
    def factor_types(self) -> tuple[GroupType, GroupType]:
        return (self.data[0].gtype, self.data[1].gtype)

    @property
    def depth_zero(self) -> bool:
        return self.endo.is_trivial

    @property
    def expected_total(self) -> int:
        return 2 * self.N + 1 if self.depth_zero else 2 * self.N

    def involution(self, t: int, m: int) -> Involution:
        return self.involutions.get((t, m), Involution.IDENTITY)


def _inv_key(item):
    (t, m), sig = item
    return (t, m, sig.value)


def validate_descriptor(desc: SimpleCuspidalDescriptor) -> SimpleCuspidalDescriptor:
    endo, N = desc.endo, desc.N
    if not endo.self_dual:
        raise DescriptorError(f"{endo.label} is not self-dual")
    if N < 0:
        raise DescriptorError(f"N must be >= 0, got {N}")
    if not endo.is_trivial and N < 1:
        raise DescriptorError("a positive-depth simple cuspidal needs N >= 1")
    if (2 * N) % endo.degree:
        raise DescriptorError(f"degree {endo.degree} does not divide 2N = {2 * N}")
    if len(desc.data) != 2:
        raise DescriptorError("a descriptor carries exactly two cuspidal data")
    ctx = descriptor_context(desc.q, endo)
    for t, d in enumerate(desc.data):
        if d.ctx != ctx:
            raise DescriptorError(f"datum {t} lives over {d.ctx!r}, expected {ctx!r}")
    kinds = [d.kind for d in desc.data]
    if endo.dual_type is DualType.UNRAMIFIED:
        ok = kinds == [GroupKind.UNITARY, GroupKind.UNITARY]
    elif endo.dual_type is DualType.RAMIFIED:
        ok = sorted(k.value for k in kinds) in (
            sorted([GroupKind.SYMPLECTIC.value, GroupKind.ODD_SO.value]),
            sorted([GroupKind.SYMPLECTIC.value, GroupKind.EVEN_SO.value]),
        )
    else:
        ok = kinds == [GroupKind.SYMPLECTIC, GroupKind.SYMPLECTIC]
    if not ok:
        raise DescriptorError(f"factor kinds {[str(k) for k in kinds]} do not fit duality type {endo.dual_type}")
    total = sum(d.natural_dim for d in desc.data)
    if total != desc.dim_E_V:
        raise DimensionMismatch(f"factor dimensions sum to {total}, dim_E V is {desc.dim_E_V}")
    for (t, m), sig in desc.involutions.items():
        if t not in (0, 1) or m < 1:
            raise DescriptorError(f"bad involution key {(t, m)}")
        if endo.is_trivial and sig is not Involution.IDENTITY:
            raise DescriptorError("depth-zero descriptors take the identity involution")
    return desc


def make_descriptor(q, endo, N, data, involutions=None, chi_twist=False) -> SimpleCuspidalDescriptor:
    invs = {k: v for k, v in (involutions or {}).items() if v is not Involution.IDENTITY}
    desc = SimpleCuspidalDescriptor(q, endo, N, tuple(data), MappingProxyType(invs), chi_twist)
    return validate_descriptor(desc)


def depth_zero_descriptor(q: int, n0: int = 0, n1: int = 0, a0=None, a1=None) -> SimpleCuspidalDescriptor:
    """Depth-zero descriptor on Sp(2n0) x Sp(2n1) over k_F.

    a0/a1 may be omitted only for a factor with n = 0, where the datum is {X-1: 1}.
    """
    endo = trivial_class()
    ctx = descriptor_context(q, endo)
    data = []
    for n, a in ((n0, a0), (n1, a1)):
        if a is None:
            if n:
                raise DescriptorError("a factor with n > 0 needs an explicit datum")
            a = {x_minus_one(ctx): 1}
        data.append(datum_validate(GroupType(GroupKind.SYMPLECTIC, ctx), 2 * n + 1, a))
    return make_descriptor(q, endo, n0 + n1, data)


# ---------------------------------------------------------------------------
# multisets


@dataclass(frozen=True, order=True)
class IJordEntry:
    label: str  # endo-class label of Theta^2
    poly: SelfDualPoly
    twisted: bool
    m: int
    deg_rho: int

    @property
    def class_key(self):
        return (self.label, self.poly.sort_key(), self.twisted)


@dataclass(frozen=True)
class IJordMultiset:
    entries: tuple[IJordEntry, ...]

    @property
    def total(self) -> int:
        return sum(e.m * e.deg_rho for e in self.entries)

    def aggregated(self) -> list[tuple[IJordEntry, int]]:
        counts = Counter(self.entries)
        return sorted(counts.items(), key=lambda kv: (kv[0].class_key, -kv[0].m))

    def classes(self) -> dict:
        out: dict = {}
        for e in self.entries:
            out.setdefault(e.class_key, []).append(e.m)
        return out

    def has_no_holes(self) -> bool:
        for ms in self.classes().values():
            present = set(ms)
            if any(m > 2 and m - 2 not in present for m in present):
                return False
        return True

    def __add__(self, other):
        return IJordMultiset(self.entries + other.entries)


@dataclass(frozen=True)
class BreakdownRow:
    poly: SelfDualPoly
    deg_rho: int
    params: HeckeParams
    real_parts: tuple[Fraction, Fraction]
    blocks: tuple[int, ...]
    contribution: int

    @property
    def weighted(self) -> int:
        return self.contribution * self.deg_rho


@dataclass(frozen=True)
class IdentityReport:
    label: str
    N: int
    depth_zero: bool
    total: int
    expected: int
    rows: tuple[BreakdownRow, ...]

    @property
    def ok(self) -> bool:
        return self.total == self.expected


def q_set(desc: SimpleCuspidalDescriptor) -> list[SelfDualPoly]:
    found = set()
    for t, d in enumerate(desc.data):
        for P in d.a_map:
            found.add(apply_involution(desc.involution(t, P.degree), P))
    return sorted(found)


def breakdown(desc: SimpleCuspidalDescriptor) -> list[BreakdownRow]:
    rows = []
    for Q in q_set(desc):
        m = Q.degree
        invs = (desc.involution(0, m), desc.involution(1, m))
        hp = hecke_params(Q, desc.data, invs, desc.f)
        parts = hp.real_parts()
        for r in (hp.r0, hp.r1):
            if r.denominator != 1:
                raise NonHalfInteger(f"non-integral Hecke parameter {r} at {Q}")
        blocks = tuple(b for s in parts for b in jordan_blocks_from_real_part(s))
        contrib = inertial_contribution(hp.r0, hp.r1, hp.t_rho)
        rows.append(BreakdownRow(Q, m * desc.degree, hp, parts, blocks, contrib))
    return rows


def ijord_simple(desc: SimpleCuspidalDescriptor) -> IJordMultiset:
    label = desc.endo.squared().label
    entries = []
    for row in breakdown(desc):
        for m in row.blocks:
            entries.append(IJordEntry(label, row.poly, False, m, row.deg_rho))
    return IJordMultiset(tuple(entries))


def identity_check(desc: SimpleCuspidalDescriptor, ij: IJordMultiset) -> IdentityReport:
    rows = tuple(breakdown(desc))
    report = IdentityReport(desc.endo.label, desc.N, desc.depth_zero, ij.total, desc.expected_total, rows)
    if not report.ok:
        raise IdentityViolation(
            f"{desc.endo.label}: sum of m*deg(rho) is {report.total}, expected {report.expected}", report
        )
    return report


def ijord_batch(descs, workers: int | None = None) -> list[IJordMultiset]:
    """Evaluate many descriptors; output order follows the input order."""
    descs = list(descs)
    if workers == 1 or len(descs) < 2:
        return [ijord_simple(d) for d in descs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(ijord_simple, descs))


# ---------------------------------------------------------------------------
# general cuspidals


def twist_by_chi(ij: IJordMultiset) -> IJordMultiset:
    return IJordMultiset(
        tuple(
            IJordEntry(e.label, apply_involution(Involution.NEGATE, e.poly), not e.twisted, e.m, e.deg_rho)
            for e in ij.entries
        )
    )


@dataclass(frozen=True)
class GeneralResult:
    multiset: IJordMultiset
    parts: tuple[SimpleCuspidalDescriptor, ...]
    reports: tuple[IdentityReport, ...]
    N: int
    chis: tuple[bool, ...] = ()

    @property
    def total(self) -> int:
        return self.multiset.total

    @property
    def expected(self) -> int:
        return 2 * self.N + 1


def ijord_general(parts, N: int | None = None) -> GeneralResult:
    """Disjoint union over the parts, each twisted by its chi flag.

    ``parts`` is a list of descriptors or (descriptor, chi) pairs. When no
    depth-zero part is given, the trivial one (N0 = 0) is added, so the
    total is always 2N + 1.
    """
    norm = []
    for p in parts:
        desc, chi = (p, p.chi_twist) if isinstance(p, SimpleCuspidalDescriptor) else p
        norm.append((desc, bool(chi)))
    if not norm:
        raise DescriptorError("a general descriptor needs at least one part")
    qs = {d.q for d, _ in norm}
    if len(qs) != 1:
        raise DescriptorError(f"parts disagree on q: {sorted(qs)}")
    labels = [d.endo.label for d, _ in norm]
    dupes = sorted({x for x in labels if labels.count(x) > 1})
    if dupes:
        raise DuplicateEndoClass(f"repeated endo-classes {dupes}")
    if not any(d.depth_zero for d, _ in norm):
        norm.insert(0, (depth_zero_descriptor(qs.pop()), False))
    norm.sort(key=lambda dc: (not dc[0].depth_zero, dc[0].endo.label))
    total_N = sum(d.N for d, _ in norm)
    if N is not None and N != total_N:
        raise DimensionMismatch(f"parts have total N = {total_N}, ambient N = {N}")
    union = IJordMultiset(())
    reports = []
    for desc, chi in norm:
        ij = ijord_simple(desc)
        reports.append(identity_check(desc, ij))
        union = union + (twist_by_chi(ij) if chi else ij)
    result = GeneralResult(union, tuple(d for d, _ in norm), tuple(reports), total_N, tuple(c for _, c in norm))
    if result.total != result.expected:
        raise IdentityViolation(f"general total {result.total}, expected {result.expected}")
    return result
