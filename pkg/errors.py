"""
Exceptions - Error hierarchy shared by the oracle, the bounds and the analysis
"""


class BoundsLabError(Exception):
    """Base class for all errors raised by this project."""


class DomainError(BoundsLabError, ValueError):
    """Input outside the domain of an operation (non-finite, negative, bad grid)."""


class PreconditionError(BoundsLabError, RuntimeError):
    """An operation precondition does not hold (e.g. no sign change in a bracket)."""


class UnknownBoundError(DomainError, KeyError):
    """A bound name that is not registered."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else ""
