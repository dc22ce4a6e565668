"""Exception hierarchy.

Two families: :class:`ValidationError` for inputs that violate a stated
constraint (the CLI maps these to exit code 2) and :class:`ComputationError`
for well-formed inputs on which an arithmetic step is undefined (exit code 3).
"""


class GSp4KitError(Exception):
    pass


class ValidationError(GSp4KitError, ValueError):
    pass


class ComputationError(GSp4KitError, ArithmeticError):
    pass


class ParityViolation(ValidationError):
    pass


class RangeViolation(ValidationError):
    pass


class CentralCharacterViolation(ValidationError):
    pass


class DeterminantMismatch(ValidationError):
    pass


class RingMismatch(ValidationError):
    pass


class WrongRegion(ValidationError):
    pass


class NotAdjacent(ValidationError):
    pass


class NonTempered(ValidationError):
    pass


class TruncationTooShort(ValidationError):
    pass


class NegativePower(ValidationError):
    pass


class ZeroDenominator(ComputationError):
    pass


class NotOrdinary(ComputationError):
    pass


class NotRankOne(ComputationError):
    pass


class NoSquareRoot(ComputationError):
    pass


class FieldMismatch(ComputationError):
    pass


class Unsupported(ComputationError):
    pass
