"""Endo-classes as opaque labels carrying numeric invariants."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .errors import ValidationError

TRIVIAL_LABEL = "Theta0"


class DualType(enum.Enum):
    TRIVIAL = "trivial"
    UNRAMIFIED = "unramified"
    RAMIFIED = "ramified"

    def __str__(self):
        return self.value


@dataclass(frozen=True, order=True)
class EndoClassInvariants:
    label: str
    degree: int
    e: int
    f: int
    dual_type: DualType | None
    self_dual: bool = True
    square_label: str | None = None

    def __post_init__(self):
        if self.degree != self.e * self.f or self.e < 1 or self.f < 1:
            raise ValidationError(f"{self.label}: degree {self.degree} != e*f = {self.e}*{self.f}")
        trivial = self.dual_type is DualType.TRIVIAL
        if trivial != (self.degree == 1 and self.self_dual):
            raise ValidationError(f"{self.label}: the trivial class is exactly the self-dual class of degree 1")
        if self.self_dual:
            if self.dual_type is None:
                raise ValidationError(f"{self.label}: self-dual classes need a duality type")
            if not trivial and self.degree % 2:
                raise ValidationError(f"{self.label}: nontrivial self-dual classes have even degree")
            if self.dual_type is DualType.UNRAMIFIED and self.f % 2:
                raise ValidationError(f"{self.label}: unramified duality type needs f even")
            if self.dual_type is DualType.RAMIFIED and self.e % 2:
                raise ValidationError(f"{self.label}: ramified duality type needs e even")
        elif self.dual_type is not None:
            raise ValidationError(f"{self.label}: only self-dual classes carry a duality type")

    @property
    def is_trivial(self) -> bool:
        return self.dual_type is DualType.TRIVIAL

    def squared(self) -> EndoClassInvariants:
        """The class of Theta^2: same invariants, relabelled. The trivial class is fixed."""
        if self.is_trivial:
            return self
        label = self.square_label or f"{self.label}^2"
        return replace(self, label=label, square_label=None)


def trivial_class() -> EndoClassInvariants:
    return EndoClassInvariants(TRIVIAL_LABEL, 1, 1, 1, DualType.TRIVIAL)
