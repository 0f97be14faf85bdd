"""Exception types shared across the package."""


class InterlaceError(Exception):
    """Base class for all errors raised by this package."""


class PolyFormatError(InterlaceError):
    """A polynomial string could not be parsed."""


class BothZeroError(InterlaceError):
    """gcd(0, 0) is undefined."""


class ZeroPolynomialError(InterlaceError):
    """The operation requires a nonzero polynomial."""


class EmptyIntervalError(InterlaceError):
    """Root counting was asked for an interval with lo > hi."""


class CertificateMismatchError(InterlaceError):
    """A root certificate does not certify the given polynomial."""


class NegativeLeadingCoefficientError(InterlaceError):
    """Interleaving is only defined for positive leading coefficients."""


class NotRealRootedError(InterlaceError):
    """A compatibility precondition failed; `which` names the offending input."""

    def __init__(self, which, reason):
        self.which = which
        self.reason = reason
        super().__init__(f"input {which}: {reason}")


class BadParametersError(InterlaceError):
    """Arguments are outside the operation's domain."""


class InvalidGammaError(InterlaceError):
    """A restriction profile violates the validity constraints."""


class BudgetExceededError(InterlaceError):
    """An enumeration would exceed the word budget."""


class DimensionMismatchError(InterlaceError):
    """Matrix and operand shapes are incompatible."""


class NegativeEntryError(InterlaceError):
    """A nonnegative numeric matrix was expected."""


class PreconditionViolatedError(InterlaceError):
    """The input sequence is not an interlacing sequence with nonnegative coefficients."""


class MalformedVectorError(InterlaceError):
    """A face-count or h-count vector violates its invariants."""
