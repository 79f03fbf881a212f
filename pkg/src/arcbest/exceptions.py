"""Exception hierarchy shared by every arcbest module."""


class ArcBestError(Exception):
    """Base class for all library errors."""


class DomainError(ArcBestError, ValueError):
    """An input lies outside the domain where a construction is defined."""


class NumericalError(ArcBestError, ArithmeticError):
    """A floating point self-check failed."""


class NoInteriorExtremum(NumericalError):
    pass


class DegenerateQuadratic(NumericalError):
    pass


class NotAlternating(NumericalError):
    pass


class BracketError(NumericalError):
    """No sign change could be bracketed for a root search."""


class ConvergenceError(NumericalError):
    """An iteration hit its cap before meeting its tolerance."""

    def __init__(self, message, best_residual=None):
        super().__init__(message)
        self.best_residual = best_residual
