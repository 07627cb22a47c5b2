"""Exception types shared across the package."""


class QEulerError(Exception):
    pass


class ZeroDenominator(QEulerError, ZeroDivisionError):
    pass


class DivisionByZero(QEulerError, ZeroDivisionError):
    pass


class PoleAtPoint(QEulerError, ZeroDivisionError):
    """A rational function was evaluated where its denominator vanishes."""


class PoleAtZero(QEulerError, ValueError):
    """A rational function with a pole at q = 0 has no power series in q."""


class IndexOutOfRange(QEulerError, IndexError):
    pass


class LambdaResidue(QEulerError, ArithmeticError):
    """A transform that must eliminate lambda left lambda-terms behind."""


class DenominatorNotUnit(QEulerError, ValueError):
    pass


class BudgetExceeded(QEulerError, RuntimeError):
    pass
