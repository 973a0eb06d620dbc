"""Exception hierarchy.

Every error raised by the library derives from :class:`ValueSetError`, so
callers (notably the CLI) can catch one type and map it to an exit code.
"""


class ValueSetError(ValueError):
    pass


# -- fields ---------------------------------------------------------------

class FieldError(ValueSetError):
    pass


class NonPrimeCharacteristic(FieldError):
    pass


class EvenCharacteristic(FieldError):
    pass


class FieldTooSmall(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class MixedFields(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class ZeroHasNoOrder(FieldError):
    pass


# -- chains and pole sets -------------------------------------------------

class ChainError(ValueSetError):
    pass


class InvalidChain(ChainError):
    pass


class ZeroAlpha(ChainError):
    pass


class ZeroBetaLast(ChainError):
    pass


class InvalidPoleSet(ChainError):
    pass


class PoleAnchorMismatch(InvalidPoleSet):
    pass


class DuplicatePoles(InvalidPoleSet):
    pass


class DegenerateDenominator(ChainError):
    pass


# -- family / enumeration -------------------------------------------------

class ZeroCoefficient(ValueSetError):
    pass


class InvalidN(ValueSetError):
    pass


class BudgetExceeded(ValueSetError):
    pass


# -- constructions --------------------------------------------------------

class ConstructionError(ValueSetError):
    pass


class ZeroParameter(ConstructionError):
    pass


class BadParameter(ConstructionError):
    pass


class CongruenceViolation(ConstructionError):
    pass


class NoSuchRoot(ConstructionError):
    pass


class CharacteristicTooSmall(ConstructionError):
    pass


class OrderMismatch(ConstructionError):
    pass


class BadCosetRep(ConstructionError):
    pass


class NotAGenerator(ConstructionError):
    pass
