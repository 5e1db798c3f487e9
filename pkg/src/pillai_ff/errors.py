"""Exception hierarchy. Every error raised by the package derives from PillaiError."""


class PillaiError(Exception):
    pass


# exact arithmetic
class ZeroDenominator(PillaiError, ZeroDivisionError):
    pass


class BothZero(PillaiError, ValueError):
    pass


class ZeroInput(PillaiError, ValueError):
    pass


class ZeroToNegativePower(PillaiError, ZeroDivisionError):
    pass


# places and heights
class ZeroElement(PillaiError, ValueError):
    pass


class NotExpressible(PillaiError, ValueError):
    pass


class AllConstant(PillaiError, ValueError):
    pass


# independence / Lemma 2
class DependentInputs(PillaiError, ValueError):
    pass


class NoSharedSupportCase(PillaiError, ValueError):
    pass


class ConstantInput(PillaiError, ValueError):
    pass


# recurrences
class NotDominant(PillaiError, ValueError):
    pass


class NotFound(PillaiError, LookupError):
    pass


class NonPolynomialInput(PillaiError, ValueError):
    pass


class InvalidRecurrence(PillaiError, ValueError):
    pass


# bounds / solver
class HypothesisViolation(PillaiError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ZeroF(PillaiError, ValueError):
    pass


class ConstantBase(PillaiError, ValueError):
    pass


class InvariantFailure(PillaiError, AssertionError):
    """A certified result failed its own exact re-verification."""


# front end
class ParseError(PillaiError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class DivisionByZeroInExpression(PillaiError, ZeroDivisionError):
    pass


class ConfigError(PillaiError, ValueError):
    pass
