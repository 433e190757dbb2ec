"""Parameters of the quadratic relation in rank-one finite Hecke algebras, and
the reducibility real parts they produce. Everything is exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContextMismatch, DegreeMismatch, NonHalfInteger, NotDivisible, ValidationError
from .ffpoly import Involution, SelfDualPoly, apply_involution, sign_of_unipotent_pole
from .lusztig import CuspidalDatum, GroupKind


def two_r_over_f(Q: SelfDualPoly, d: CuspidalDatum, sig_m: Involution) -> int:
    """The integer 2r/f; r itself may be a half-integer multiple of f."""
    if Q.ctx != d.ctx:
        raise ContextMismatch(f"{Q} lives over {Q.ctx!r}, datum over {d.ctx!r}")
    P = apply_involution(sig_m, Q)
    pole = sign_of_unipotent_pole(P)
    if pole == +1:
        b = d.b_pole(+1)
        return 2 * (2 * b if d.kind is GroupKind.EVEN_SO else 2 * b + 1)
    if pole == -1:
        b = d.b_pole(-1)
        return 2 * (2 * b + 1 if d.kind is GroupKind.ODD_SO else 2 * b)
    return (2 * d.b(P) + 1) * P.degree


def hecke_parameter(Q: SelfDualPoly, d: CuspidalDatum, sig_m: Involution, f: int, m: int | None = None) -> Fraction:
    if f < 1:
        raise ValidationError(f"f must be >= 1, got {f}")
    if m is not None and Q.degree != m:
        raise DegreeMismatch(f"{Q} has degree {Q.degree}, expected {m}")
    return Fraction(two_r_over_f(Q, d, sig_m) * f, 2)


@dataclass(frozen=True)
class HeckeParams:
    r0: Fraction
    r1: Fraction
    f: int
    m: int

    @property
    def t_rho(self) -> int:
        return self.m * self.f

    @property
    def two_r_over_f_is_odd(self) -> bool:
        # parity coherence makes the two flags agree; report the t=0 one
        return (2 * self.r0 / self.f).numerator % 2 == 1

    def real_parts(self):
        return reducibility_real_parts(self.r0, self.r1, self.t_rho)


def hecke_params(Q: SelfDualPoly, data, involutions, f: int) -> HeckeParams:
    """r0, r1 for Q given the pair of data and the per-factor involutions."""
    r0 = hecke_parameter(Q, data[0], involutions[0], f)
    r1 = hecke_parameter(Q, data[1], involutions[1], f)
    return HeckeParams(r0, r1, f, Q.degree)


def _half_integral(x: Fraction) -> bool:
    return (2 * x).denominator == 1


def reducibility_real_parts(r0, r1, t_rho: int) -> tuple[Fraction, Fraction]:
    """The pair {(r0+r1)/2t, |r0-r1|/2t}, larger first."""
    if t_rho < 1:
        raise ValidationError(f"t(rho) must be >= 1, got {t_rho}")
    r0, r1 = Fraction(r0), Fraction(r1)
    s = (r0 + r1) / (2 * t_rho)
    d = abs(r0 - r1) / (2 * t_rho)
    for x in (s, d):
        if not _half_integral(x):
            raise NonHalfInteger(f"real part {x} from r0={r0}, r1={r1}, t={t_rho} is not a half-integer")
    return (s, d)


def unramified_twist_number(dim_W_over_F: int, e_EF: int) -> int:
    if e_EF < 1 or dim_W_over_F % e_EF:
        raise NotDivisible(f"{e_EF} does not divide {dim_W_over_F}")
    return dim_W_over_F // e_EF
