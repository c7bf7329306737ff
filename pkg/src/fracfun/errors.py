"""Exception hierarchy shared by every fracfun module."""


class FracFunError(Exception):
    """Base class for all library errors."""


class DomainError(FracFunError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(DomainError):
    """Evaluation hit a pole of the Gamma function that cannot be cancelled."""


class UndefinedPochhammerError(FracFunError, ArithmeticError):
    """A generalized Pochhammer symbol fell into its undefined branch."""


class DivergenceError(FracFunError, ArithmeticError):
    """A hypergeometric series is divergent for the requested argument."""


class ConvergenceError(FracFunError, ArithmeticError):
    """A series or quadrature did not reach the requested tolerance."""


class WindowError(FracFunError, IndexError):
    """A discrete sequence was accessed outside its stored window."""
