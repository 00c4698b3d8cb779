"""Exception hierarchy shared by every layer of the package."""


class OuterplanarError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(OuterplanarError, ValueError):
    """Invalid arguments: mismatched orders, out-of-range sizes, bad flags."""


class SeriesDomainError(OuterplanarError, ArithmeticError):
    """A series operation was applied outside its domain (e.g. sqrt of 2 + x)."""


class ConsistencyError(OuterplanarError, RuntimeError):
    """An internal identity failed: a cancellation, residual or cross-check."""


class SolverError(OuterplanarError, RuntimeError):
    """A numerical root finder diverged or left the admissible region."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = list(trace or [])
