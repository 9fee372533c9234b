"""Semantic exceptions shared across the package."""


class BivnormError(Exception):
    """Base class for all package errors."""


class DomainError(BivnormError, ValueError):
    """An argument lies outside the contract of the operation."""


class EngineRejected(DomainError):
    """An evaluation engine refuses parameters outside its validity region."""


class ConvergenceError(BivnormError, RuntimeError):
    """A numerical routine exhausted its budget before reaching tolerance.

    Attributes
    ----------
    estimate : float
        The error estimate achieved when the budget ran out.
    """

    def __init__(self, message: str, estimate: float = float("nan")):
        super().__init__(message)
        self.estimate = float(estimate)
