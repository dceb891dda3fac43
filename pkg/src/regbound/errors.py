"""Exception hierarchy.

Every error carries the process exit code the command line front end uses
when it escapes a command.
"""

from __future__ import annotations


class RegboundError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class ValidationError(RegboundError, ValueError):
    """Input data violates a structural invariant."""

    exit_code = 2

    def __init__(self, message: str, field: str | None = None):
        if field:
            message = f"{field}: {message}"
        super().__init__(message)
        self.field = field


class ParseError(ValidationError):
    """A spec document could not be parsed."""


class DuplicateAbscissa(ValidationError):
    pass


class NonIntegralCoefficients(ValidationError):
    pass


class DegreeNonPositive(ValidationError):
    pass


class DimensionZero(ValidationError):
    pass


class UnknownFamily(ValidationError):
    pass


class IncompatibleRequest(RegboundError, ValueError):
    """The request is well formed but cannot be answered for this input."""

    exit_code = 4


class IndexOutOfRange(IncompatibleRequest):
    pass


class MOutOfRange(IncompatibleRequest):
    """Projection target dimension outside ``n+1 <= m <= r``."""


class MTooSmall(MOutOfRange):
    pass


class MTooLarge(MOutOfRange):
    pass


class Incompatible(IncompatibleRequest):
    """No splitting with the requested shape exists."""


class MathematicalInconsistency(RegboundError, ArithmeticError):
    """Numerical data contradicts the hypotheses of the bound."""

    exit_code = 3


class NegativeRank(MathematicalInconsistency):
    def __init__(self, index: int, value: int):
        super().__init__(f"rank a_{index} = {value} is negative")
        self.index = index
        self.value = value


class NegativeRankE(MathematicalInconsistency):
    def __init__(self, value: int):
        super().__init__(f"rank of E = {value} is negative")
        self.value = value


class InconsistentProfile(MathematicalInconsistency):
    pass


class IdentityViolation(MathematicalInconsistency):
    """Two independent computations of the same quantity disagree."""
