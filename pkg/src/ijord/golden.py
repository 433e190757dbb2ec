"""The maximal example: dim_E V = 1 and dim W = dim V.

Here the reductive quotients are U(1) x U(0) (E/E0 unramified) or
Sp(0) x O(1) (E/E0 ramified). Every self-dual Q of degree 1 is a candidate
for the finite cuspidal on the W side; ``maximal_table`` lists r_a, r_b and
the real parts for each. ``f0`` is the residue degree of E0/F.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .endo import DualType, EndoClassInvariants
from .ffpoly import SelfDualPoly, enumerate_self_dual_irreducible, x_minus_one
from .hecke import hecke_params
from .jordan import SimpleCuspidalDescriptor, descriptor_context, make_descriptor
from .lusztig import GroupKind, GroupType, datum_validate


def maximal_descriptor(dual_type: DualType, q: int = 3, f0: int = 1) -> SimpleCuspidalDescriptor:
    if dual_type is DualType.UNRAMIFIED:
        endo = EndoClassInvariants(f"Max{2 * f0}u", 2 * f0, 1, 2 * f0, dual_type)
        ctx = descriptor_context(q, endo)
        Q0 = enumerate_self_dual_irreducible(ctx, 1)[0]
        data = (
            datum_validate(GroupType(GroupKind.UNITARY, ctx), 1, {Q0: 1}),
            datum_validate(GroupType(GroupKind.UNITARY, ctx), 0, {}),
        )
    elif dual_type is DualType.RAMIFIED:
        endo = EndoClassInvariants(f"Max{2 * f0}r", 2 * f0, 2, f0, dual_type)
        ctx = descriptor_context(q, endo)
        data = (
            datum_validate(GroupType(GroupKind.SYMPLECTIC, ctx), 1, {x_minus_one(ctx): 1}),
            datum_validate(GroupType(GroupKind.ODD_SO, ctx), 0, {}),
        )
    else:
        raise ValueError("the maximal example has positive depth")
    return make_descriptor(q, endo, f0, data)


@dataclass(frozen=True)
class MaximalRow:
    poly: SelfDualPoly
    r_a: Fraction
    r_b: Fraction
    real_parts: tuple[Fraction, Fraction]


def maximal_table(desc: SimpleCuspidalDescriptor) -> list[MaximalRow]:
    """r_a (factor 0), r_b (factor 1) and real parts for every degree-1 candidate Q."""
    rows = []
    for Q in enumerate_self_dual_irreducible(desc.ctx, 1):
        hp = hecke_params(Q, desc.data, (desc.involution(0, 1), desc.involution(1, 1)), desc.f)
        rows.append(MaximalRow(Q, hp.r0, hp.r1, hp.real_parts()))
    return rows


def residue_degree_of_fixed_field(desc: SimpleCuspidalDescriptor) -> int:
    return desc.f // 2 if desc.endo.dual_type is DualType.UNRAMIFIED else desc.f
