"""Exception hierarchy shared by every module in the package."""


class MonoidError(ValueError):
    """Base class for invalid inputs to the library."""


class WrongLength(MonoidError):
    pass


class NegativeEntry(MonoidError):
    pass


class NotInMonoid(MonoidError):
    pass


class PartSumNotMultipleOfModulus(MonoidError):
    pass


class ModulusMismatch(MonoidError):
    pass


class TrivialSolution(MonoidError):
    pass


class NotAUnit(MonoidError):
    pass


class NotActionClosed(MonoidError):
    """Raised when a set of solutions is not a union of orbits.

    ``witness`` holds the offending image ``g * A``.
    """

    def __init__(self, message, witness=None, g=None, source=None):
        super().__init__(message)
        self.witness = witness
        self.g = g
        self.source = source


class TooManyParts(MonoidError):
    pass


class PartTooLarge(MonoidError):
    pass


class WrongSum(MonoidError):
    pass


class SupportMismatch(MonoidError):
    pass


class BelowThreshold(MonoidError):
    def __init__(self, k, required):
        super().__init__(
            f"degree {k} is below the completeness threshold {required}"
        )
        self.k = k
        self.required = required


class ResourceLimit(RuntimeError):
    """An enumeration exceeded its configured candidate cap."""


class ScaleExceeded(ResourceLimit):
    """A check was asked to run above its desk-scale cap."""


class OracleScaleExceeded(ScaleExceeded):
    pass
