"""Exception types raised by the library."""

from __future__ import annotations


class NicholsError(Exception):
    """Base class for all library errors."""


class ScalarSyntaxError(NicholsError, ValueError):
    pass


class ConductorMismatch(NicholsError, ValueError):
    pass


class ConstraintViolation(NicholsError, ValueError):
    """Family parameters violate one of the domain constraints."""


class NoMatchingRow(NicholsError, LookupError):
    """No table row guard holds for the given parameters."""


class DegreeCapExceeded(NicholsError, MemoryError):
    pass
