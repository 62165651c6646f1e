"""Exception types shared across the library."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the supported real domain."""


class InvalidCError(DomainError):
    """The lower parameter c is zero or a negative integer, so the
    coefficient recurrence would divide by zero at some finite degree."""


class NoConvergenceError(RuntimeError):
    """The term budget ran out before the tail bound dropped below tol."""


class QuadratureFailureError(RuntimeError):
    """Adaptive subdivision exhausted its panel budget before meeting the
    requested error estimate."""
