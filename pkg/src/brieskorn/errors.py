"""Exception hierarchy.

Two families: :class:`PreconditionError` for bad input (exit status 2 in the
CLI) and :class:`ConsistencyError` for a violated mathematical identity that
should never happen (exit status 3).
"""


class BrieskornError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(BrieskornError, ValueError):
    pass


class ConsistencyError(BrieskornError, AssertionError):
    pass


# -- input validation -------------------------------------------------------

class TooFewExponents(PreconditionError):
    pass


class ExponentTooSmall(PreconditionError):
    pass


class NotPairwiseCoprime(PreconditionError):
    pass


class NotPrime(PreconditionError):
    pass


class PrimeDoesNotDivide(PreconditionError):
    pass


class PrimeDividesExponent(PreconditionError):
    pass


class PrimeDividesProduct(PreconditionError):
    pass


class DegenerateBase(PreconditionError):
    pass


class NotInSemigroup(PreconditionError):
    pass


class OutOfRange(PreconditionError):
    pass


class UnsupportedCase(PreconditionError):
    pass


class UnsupportedScenario(PreconditionError):
    pass


class ActionFreeOnSummand(PreconditionError):
    pass


class EmptyReduced(PreconditionError):
    pass


class ProfileTooLarge(PreconditionError):
    pass


# -- internal consistency ---------------------------------------------------

class IntegralityViolation(ConsistencyError):
    pass


class ParityViolation(ConsistencyError):
    pass


class NegativeDifference(ConsistencyError):
    pass


class NegativeBound(ConsistencyError):
    pass


class CrossCheckFailure(ConsistencyError):
    pass
