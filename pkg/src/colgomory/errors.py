"""Exception hierarchy shared by every module."""


class ColgomoryError(Exception):
    """Base class for all package errors."""


class ValidationError(ColgomoryError, ValueError):
    """Instance data is malformed."""


class DimensionError(ValidationError):
    pass


class RankError(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, line=None, field=None):
        loc = []
        if line is not None:
            loc.append("line %d" % line)
        if field is not None:
            loc.append("field %r" % field)
        super().__init__("%s: %s" % (", ".join(loc), message) if loc else message)
        self.line = line
        self.field = field


class SingularBasis(ColgomoryError, ArithmeticError):
    pass


class PivotError(ColgomoryError, ArithmeticError):
    pass


class ContractViolation(ColgomoryError):
    """A documented precondition does not hold."""


class PrimalInfeasible(ColgomoryError):
    """Phase one ended with a positive artificial objective."""


class NotFractional(ColgomoryError, ValueError):
    pass


class InvalidShift(ColgomoryError, ValueError):
    pass


class InvariantViolation(ColgomoryError, AssertionError):
    """An internal invariant failed; always a bug."""


class UnboundedRelaxation(ColgomoryError):
    """The continuous relaxation is unbounded in some coordinate."""

    def __init__(self, message, coordinate=None, direction=None):
        super().__init__(message)
        self.coordinate = coordinate
        self.direction = direction


class EmptyRelaxation(ColgomoryError):
    """The continuous relaxation has no feasible point."""


class TooLarge(ColgomoryError):
    """Enumeration box exceeds the configured point cap."""
