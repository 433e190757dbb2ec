"""Cuspidal data of finite classical groups: the exponents a_P of the
characteristic polynomial of a semisimple dual-group element, with the
derived b_P from the constraint system of each group type.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt
from types import MappingProxyType

from .errors import (
    ContextMismatch,
    DimensionMismatch,
    EigenTypeMismatch,
    MissingSymplecticPlus,
    NonTriangular,
    ValidationError,
)
from .ffpoly import (
    DualityContext,
    Involution,
    SelfDualPoly,
    apply_involution,
    sign_of_unipotent_pole,
    x_minus_one,
)

__all__ = [
    "GroupKind",
    "GroupType",
    "CuspidalDatum",
    "Involution",
    "datum_validate",
    "datum_twist",
    "datum_dimension",
    "natural_dimension",
    "dual_dimension",
    "a_from_b",
    "solve_b",
]


class GroupKind(enum.Enum):
    UNITARY = "unitary"
    ODD_SO = "odd_orthogonal"
    SYMPLECTIC = "symplectic"
    EVEN_SO = "even_orthogonal"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class GroupType:
    kind: GroupKind
    ctx: DualityContext

    def __post_init__(self):
        if (self.kind is GroupKind.UNITARY) != (self.ctx.index == 2):
            raise ValidationError(f"{self.kind} is incompatible with a context of index {self.ctx.index}")


def natural_dimension(kind: GroupKind, dual_dim: int) -> int:
    """Dimension of the space the group itself acts on, from the dual-side dimension."""
    if kind is GroupKind.SYMPLECTIC:
        if dual_dim % 2 == 0:
            raise DimensionMismatch(f"a symplectic dual space has odd dimension, got {dual_dim}")
        return dual_dim - 1
    if kind is GroupKind.ODD_SO:
        if dual_dim % 2:
            raise DimensionMismatch(f"an odd orthogonal dual space has even dimension, got {dual_dim}")
        return dual_dim + 1
    if kind is GroupKind.EVEN_SO and dual_dim % 2:
        raise DimensionMismatch(f"an even orthogonal space has even dimension, got {dual_dim}")
    return dual_dim


def dual_dimension(kind: GroupKind, natural_dim: int) -> int:
    if kind is GroupKind.SYMPLECTIC:
        return natural_dim + 1
    if kind is GroupKind.ODD_SO:
        return natural_dim - 1
    return natural_dim


# a as a function of b, per (kind, pole). pole is +1 for X-1, -1 for X+1, None otherwise.
def a_from_b(kind: GroupKind, pole: int | None, b: int) -> int:
    if pole is None or kind is GroupKind.UNITARY:
        return b * (b + 1) // 2
    if kind is GroupKind.ODD_SO:
        return 2 * (b * b + b)
    if kind is GroupKind.SYMPLECTIC:
        return 2 * (b * b + b) + 1 if pole == +1 else 2 * b * b
    return 2 * b * b


def _triangular_root(x):
    # b with b(b+1)/2 = x, or None
    if x < 0:
        return None
    r = (isqrt(8 * x + 1) - 1) // 2
    return r if r * (r + 1) // 2 == x else None


def solve_b(kind: GroupKind, pole: int | None, a: int) -> int:
    if pole is None or kind is GroupKind.UNITARY:
        b = _triangular_root(a)
    elif kind is GroupKind.ODD_SO:
        b = _triangular_root(a // 4) if a % 4 == 0 else None
    elif kind is GroupKind.SYMPLECTIC and pole == +1:
        b = _triangular_root((a - 1) // 4) if a % 4 == 1 else None
    else:
        h = a // 2 if a % 2 == 0 else -1
        r = isqrt(h) if h >= 0 else -1
        b = r if r >= 0 and r * r == h else None
    if b is None or a_from_b(kind, pole, b) != a:
        raise NonTriangular(f"a={a} admits no b for {kind} at pole {pole}")
    return b


def _eigen_applicable(kind):
    if kind is GroupKind.EVEN_SO:
        return {+1, -1}
    if kind is GroupKind.SYMPLECTIC:
        return {-1}
    return set()


@dataclass(frozen=True)
class CuspidalDatum:
    gtype: GroupType
    dual_dim: int
    a_map: MappingProxyType  # SelfDualPoly -> a
    b_map: MappingProxyType  # SelfDualPoly -> b
    eigen_types: MappingProxyType  # pole (+1/-1) -> sign

    def __hash__(self):
        return hash((self.gtype, self.dual_dim, tuple(sorted(self.a_map.items()))))

    def __eq__(self, other):
        if not isinstance(other, CuspidalDatum):
            return NotImplemented
        return (
            self.gtype == other.gtype
            and self.dual_dim == other.dual_dim
            and dict(self.a_map) == dict(other.a_map)
            and dict(self.eigen_types) == dict(other.eigen_types)
        )

    @property
    def kind(self) -> GroupKind:
        return self.gtype.kind

    @property
    def ctx(self) -> DualityContext:
        return self.gtype.ctx

    @property
    def natural_dim(self) -> int:
        return natural_dimension(self.kind, self.dual_dim)

    def a(self, P: SelfDualPoly) -> int:
        return self.a_map.get(P, 0)

    def b(self, P: SelfDualPoly) -> int:
        return self.b_map.get(P, 0)

    def b_pole(self, pole: int) -> int:
        """b_+ (pole=+1) or b_- (pole=-1)."""
        for P, b in self.b_map.items():
            if sign_of_unipotent_pole(P) == pole:
                return b
        return 0

    def support(self) -> list[SelfDualPoly]:
        return sorted(self.a_map)

    def __repr__(self):
        entries = ", ".join(f"{P}: {a}" for P, a in sorted(self.a_map.items()))
        return f"CuspidalDatum({self.kind}, dual_dim={self.dual_dim}, {{{entries}}})"


def datum_validate(gtype: GroupType, dual_dim: int, a_map, eigen_types=None) -> CuspidalDatum:
    eigen_types = dict(eigen_types or {})
    a_map = dict(a_map)
    kind, ctx = gtype.kind, gtype.ctx
    b_map = {}
    for P, a in a_map.items():
        if not isinstance(P, SelfDualPoly):
            raise ValidationError(f"key {P!r} is not a self-dual polynomial")
        if P.ctx != ctx:
            raise ContextMismatch(f"{P} lives over {P.ctx!r}, datum over {ctx!r}")
        if not isinstance(a, int) or a < 1:
            raise ValidationError(f"a_P must be a positive integer, got {a!r} at {P}")
        b_map[P] = solve_b(kind, sign_of_unipotent_pole(P), a)
    if kind is GroupKind.SYMPLECTIC and x_minus_one(ctx) not in a_map:
        raise MissingSymplecticPlus("a symplectic datum needs an odd a_+ >= 1 at X-1")
    total = sum(a * P.degree for P, a in a_map.items())
    if total != dual_dim:
        raise DimensionMismatch(f"sum of a_P deg P is {total}, dual_dim is {dual_dim}")
    natural_dimension(kind, dual_dim)
    allowed = _eigen_applicable(kind)
    for pole, sign in eigen_types.items():
        if pole not in allowed:
            raise EigenTypeMismatch(f"no eigen type is attached to pole {pole:+d} for {kind}")
        if sign not in (1, -1):
            raise EigenTypeMismatch(f"eigen type must be +1 or -1, got {sign}")
    datum = CuspidalDatum(gtype, dual_dim, MappingProxyType(a_map), MappingProxyType(b_map), MappingProxyType(eigen_types))
    for pole, sign in eigen_types.items():
        expected = (-1) ** datum.b_pole(pole)
        if sign != expected:
            raise EigenTypeMismatch(f"eigen type at pole {pole:+d} is {sign}, b forces {expected}")
    return datum


def datum_twist(d: CuspidalDatum, sig: Involution) -> CuspidalDatum:
    if sig is Involution.IDENTITY:
        return d
    a_map = {apply_involution(sig, P): a for P, a in d.a_map.items()}
    eigen = {-pole: s for pole, s in d.eigen_types.items()}
    return datum_validate(d.gtype, d.dual_dim, a_map, eigen)


def datum_dimension(d: CuspidalDatum) -> int:
    return sum(a * P.degree for P, a in d.a_map.items())
