"""Exception hierarchy shared by every module."""


class RSInsdelError(Exception):
    """Base class for all errors raised by this package."""


class NonPrime(RSInsdelError, ValueError):
    pass


class NotPrimePower(RSInsdelError, ValueError):
    pass


class ReducibleModulus(RSInsdelError, ValueError):
    pass


class NoPrimitiveFound(RSInsdelError, RuntimeError):
    pass


class FieldMismatch(RSInsdelError, ValueError):
    pass


class DivisionByZero(RSInsdelError, ZeroDivisionError):
    pass


class NonDivisorDegree(RSInsdelError, ValueError):
    pass


class NotCoprime(RSInsdelError, ValueError):
    pass


class NotInGroup(RSInsdelError, ValueError):
    pass


class GroupTooLarge(RSInsdelError, ValueError):
    pass


class TooLarge(RSInsdelError, ValueError):
    """A configured enumeration cap would be exceeded."""


class TooSmall(RSInsdelError, ValueError):
    pass


class DuplicateEvaluationPoints(RSInsdelError, ValueError):
    pass


class ZeroDelta(RSInsdelError, ValueError):
    pass


class StrictViolation(RSInsdelError, ValueError):
    """A construction hypothesis required in strict mode does not hold."""


class FieldTooLarge(RSInsdelError, ValueError):
    pass


class NotADivisor(RSInsdelError, ValueError):
    pass


class NotPairwiseCoprime(RSInsdelError, ValueError):
    pass


class NotPowerOfTwoCount(RSInsdelError, ValueError):
    pass


class CertificationFailed(RSInsdelError, RuntimeError):
    pass


class NoPrimeFound(RSInsdelError, RuntimeError):
    pass


class BadFactorization(RSInsdelError, ValueError):
    pass


class BadDims(RSInsdelError, ValueError):
    pass


class ParseError(RSInsdelError, ValueError):
    pass
