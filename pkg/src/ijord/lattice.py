"""Jumps of hom-lattice sequences and the signature characters they induce.

A lattice sequence is recorded only through its period e, its jump set
a + sZ and its dimension. The brute-force counterpart in ``oracles`` builds
an explicit split model and compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import NonIntegral, NonIntegralDimension, NotDivisor, PeriodMismatch, ValidationError, ZeroDeterminant
from .ffpoly import FiniteField, Involution


@dataclass(frozen=True)
class LatticeSeqSpec:
    e: int
    a: int
    s: int
    dim: int
    principal: bool = True

    def __post_init__(self):
        if self.e < 1 or self.s < 1 or self.e % self.s:
            raise ValidationError(f"jump step {self.s} must divide the period {self.e}")
        if self.dim < 1:
            raise ValidationError(f"dimension must be positive, got {self.dim}")
        object.__setattr__(self, "a", self.a % self.s)

    def jumps(self) -> set[int]:
        """Jumps inside one period [0, e)."""
        return {x for x in range(self.e) if (x - self.a) % self.s == 0}


@dataclass(frozen=True)
class JumpResult:
    offset: int
    step: int
    c: int

    @property
    def coset(self) -> tuple[int, int]:
        return (self.offset, self.step)


def hom_lattice_jumps(ly: LatticeSeqSpec, lw: LatticeSeqSpec) -> JumpResult:
    if ly.e != lw.e:
        raise PeriodMismatch(f"periods differ: {ly.e} vs {lw.e}")
    g = gcd(lw.s, ly.s)
    num = g * lw.dim * ly.dim
    if num % ly.e:
        raise NonIntegralDimension(f"c = {g}*{lw.dim}*{ly.dim}/{ly.e} is not an integer")
    return JumpResult((lw.a - ly.a) % g, g, num // ly.e)


def _val2(n: int) -> int:
    return (n & -n).bit_length() - 1


def same_jumps(e: int, e_W: int, r_Y: int) -> bool:
    if e_W < 1 or r_Y < 1 or e % e_W or e % r_Y:
        raise NotDivisor(f"e_W={e_W} and r_Y={r_Y} must divide e={e}")
    return _val2(e_W) < _val2(r_Y)


def jump_shift(e: int, e_W: int, r_Y: int):
    """0 when the jump sets agree, else half of gcd(e/r_Y, e/e_W) (possibly a half-integer)."""
    if same_jumps(e, e_W, r_Y):
        return Fraction(0)
    return Fraction(gcd(e // r_Y, e // e_W), 2)


def signature_dimension(e_W: int, r_Y: int, dim_F_Y: int) -> int:
    num = e_W * dim_F_Y
    den = lcm(r_Y, e_W)
    if num % den:
        raise NonIntegral(f"{e_W}*{dim_F_Y}/lcm({r_Y},{e_W}) is not an integer")
    return num // den


def signature_char(det_value: int, field: FiniteField) -> int:
    """det^((q-1)/2) as +1 or -1, i.e. the quadratic residue symbol of the determinant."""
    if det_value == 0:
        raise ZeroDeterminant("determinant is zero")
    v = field.pow(det_value, (field.q - 1) // 2)
    return 1 if v == 1 else -1


def epsilon_involution_hint(terms) -> Involution:
    """NegateVariable exactly when an odd number of terms have odd d."""
    odd = sum(signature_dimension(e_W, r_Y, dim) % 2 for e_W, r_Y, dim in terms)
    return Involution.NEGATE if odd % 2 else Involution.IDENTITY
