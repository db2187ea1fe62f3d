"""Exception hierarchy shared across the package."""


class RayGrowthError(Exception):
    """Base class for all raygrowth errors."""


class DomainError(RayGrowthError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at (or too close to) a pole."""


class ConvergenceError(RayGrowthError, ArithmeticError):
    """A series or iteration failed to reach the requested tolerance."""


class StripViolationError(DomainError):
    """Transform evaluated outside its declared strip of convergence."""


class ExceptionalAngleError(DomainError):
    """Angle falls on (or within the guard band of) an exceptional root."""


class CountMismatchError(RayGrowthError):
    """Root scan found a different number of zeros than predicted."""


class OutOfRangeError(DomainError):
    """Target value outside the attainable range of a monotone map.

    Carries the numerically determined admissible interval.
    """

    def __init__(self, message, lo=None, hi=None):
        super().__init__(message)
        self.lo = lo
        self.hi = hi


class ParseError(RayGrowthError, ValueError):
    """Malformed declarative input (mass-model file or config file)."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
