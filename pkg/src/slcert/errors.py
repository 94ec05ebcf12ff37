"""Exception taxonomy for slcert.

Every error raised by the library derives from SlcertError, so callers can
catch one type at the boundary.  Search failures carry enough state to widen
the budget and retry.
"""


class SlcertError(Exception):
    """Base class for all slcert errors."""


class ParseError(SlcertError):
    """Malformed ring, element, matrix, or certificate text."""

    def __init__(self, message, text=None, pos=None):
        if pos is not None:
            message = "%s (at position %d)" % (message, pos)
        super().__init__(message)
        self.text = text
        self.pos = pos


class UnsupportedRing(SlcertError):
    """Ring outside the supported families (e.g. narrow class number > 1)."""


class NotSquarefree(SlcertError):
    pass


class DivisionByZero(SlcertError):
    pass


class NotAUnit(SlcertError):
    """Inversion of an element that is not invertible in the ring."""


class ExactDivisionError(SlcertError):
    """exact_divide called on a non-divisible pair."""


class ZeroArgument(SlcertError):
    pass


class BothZero(SlcertError):
    pass


class UnitIdeal(SlcertError):
    """Operation that expects a proper nonzero ideal got the unit ideal."""


class IncompatibleModuli(SlcertError):
    """CRT instance with non-coprime moduli."""


class NotCoprime(SlcertError):
    pass


class NotAGenerator(SlcertError):
    pass


class TorsionUnit(SlcertError):
    """Level requested for a root of unity (the level would be infinite)."""


class EvenModulus(SlcertError):
    pass


class PreconditionViolated(SlcertError):
    """A stated hypothesis of an operation fails; the message names it."""


class BudgetExhausted(SlcertError):
    """A bounded search ran out of candidates.

    Attributes:
        stage: short tag naming which search starved.
        examined: number of candidates looked at before giving up.
    """

    def __init__(self, stage, examined, message=None):
        super().__init__(message or "search budget exhausted in %s after %d candidates"
                         % (stage, examined))
        self.stage = stage
        self.examined = examined


class ShapeMismatch(SlcertError):
    """Matrix does not have the diagonal shape required by the congruence test."""


class BadModulus(SlcertError):
    pass


class UnsupportedPrime(SlcertError):
    pass


class BadResidueClass(SlcertError):
    pass


class NoUnitEntry(SlcertError):
    """finish() called on a row with no unit entry."""


class VerificationFailed(SlcertError):
    """Internal guard: a certificate failed its own re-verification."""
