"""Exception hierarchy.

Every error raised by the library derives from IJordError so the CLI can map
it to an exit code. ValidationError covers malformed input (exit 1) and
InvariantViolation covers a failed identity or invariant (exit 2).
"""


class IJordError(Exception):
    pass


class ValidationError(IJordError):
    pass


class InvariantViolation(IJordError):
    pass


# ffpoly
class NonPrime(ValidationError):
    pass


class EvenCharacteristic(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class ZeroConstantTerm(ValidationError):
    pass


class NotSelfDual(ValidationError):
    pass


# lusztig
class NonTriangular(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class EigenTypeMismatch(ValidationError):
    pass


class MissingSymplecticPlus(ValidationError):
    pass


class ContextMismatch(ValidationError):
    pass


# hecke / jordan
class DegreeMismatch(ValidationError):
    pass


class NonHalfInteger(ValidationError):
    pass


class NotDivisible(ValidationError):
    pass


class DuplicateEndoClass(ValidationError):
    pass


class DescriptorError(ValidationError):
    pass


class IdentityViolation(InvariantViolation):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


# lattice
class PeriodMismatch(ValidationError):
    pass


class NonIntegralDimension(ValidationError):
    pass


class NotDivisor(ValidationError):
    pass


class NonIntegral(ValidationError):
    pass


class ZeroDeterminant(ValidationError):
    pass


# params
class OddDegree(ValidationError):
    pass


class UnpairedLabel(ValidationError):
    pass


class RegistryMissing(ValidationError):
    pass


class NoSolution(InvariantViolation):
    pass
