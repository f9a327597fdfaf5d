"""Exception types shared across the package."""


class SemisymError(Exception):
    """Base class for all library errors."""


class NotAUnit(SemisymError, ArithmeticError):
    """Raised when an element has no multiplicative inverse in its ring."""


class RingMismatch(SemisymError, TypeError):
    pass


class DegreeMismatch(SemisymError, ValueError):
    pass


class GroupTooLarge(SemisymError, RuntimeError):
    pass


class NotASubgroup(SemisymError, ValueError):
    pass


class NonUnitValue(SemisymError, ValueError):
    pass


class InconsistentCharacter(SemisymError, ValueError):
    pass


class HypothesisViolation(SemisymError):
    """The ring/group data violate the standing hypotheses of an operation.

    Typically: the coefficient ring is not an integral domain, or the
    order of the acting group is not invertible in it.
    """


class DegreeOverflow(SemisymError, ValueError):
    """A degree beyond the range covered by a character sequence was requested."""


class ContextMismatch(SemisymError, ValueError):
    pass


class EnumerationTooLarge(SemisymError, RuntimeError):
    pass
