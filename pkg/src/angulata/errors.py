"""Exception hierarchy.

Domain errors (bad input, impossible requests) map to CLI exit code 2;
``InvariantViolation`` signals that an internal consistency check failed and
maps to exit code 3.
"""

from __future__ import annotations


class AngulataError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 2


class ValidationError(AngulataError, ValueError):
    """Malformed tuple, arc, collection or file."""


class NotMutable(AngulataError):
    """The requested summand has no replacement."""


class RigidityViolation(AngulataError):
    """Two objects (or arcs) that should be compatible intertwine."""


class ExchangeGraphDisconnected(AngulataError):
    """No mutation path joins two tilting objects within the budget."""


class BudgetExceeded(AngulataError):
    """A search ran out of its node or time budget.

    ``partial`` holds whatever was produced before the budget ran out.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class UnsupportedDimension(AngulataError):
    """Operation is not defined for the given dimension parameter."""


class BasisMismatch(AngulataError):
    """Index vectors expressed in different bases were combined."""


class InvariantViolation(AngulataError, AssertionError):
    """A structural invariant failed at runtime.

    These are never expected; when one fires the combinatorial rule that
    produced the data is wrong, not the input.
    """

    exit_code = 3
