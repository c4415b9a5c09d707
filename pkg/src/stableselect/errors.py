"""Semantic exception hierarchy shared by all modules.

The CLI maps these onto process exit codes, so raising the right class
matters: configuration problems must not masquerade as data problems.
"""


class StableSelectError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(StableSelectError, ValueError):
    """A run configuration violates its contract (exit code 2)."""


class InvalidDataError(StableSelectError, ValueError):
    """Input data violates its contract: shapes, ranges, missing values (exit code 3)."""


class CalibrationInfeasibleError(StableSelectError):
    """No parameter choice can certify the requested error budget (exit code 4).

    Carries the best achievable bound so callers can report how far off
    the request was.
    """

    def __init__(self, message, best_bound=None, best_pair=None):
        super().__init__(message)
        self.best_bound = best_bound
        self.best_pair = best_pair


class NumericalError(StableSelectError, ArithmeticError):
    """A numerical routine failed to reach its guaranteed accuracy (exit code 5)."""
