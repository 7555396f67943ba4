#!/usr/bin/env python3
"""
Exception hierarchy for spinscreen.

Library code raises these; only the command-line front end translates them
into process exit codes.
"""


class SpinScreenError(Exception):
    """Base exception for spinscreen operations."""
    pass


class LabelError(SpinScreenError, ValueError):
    """Raised when an angular momentum label cannot be parsed or is invalid."""
    pass


class EmptyDomain(SpinScreenError):
    """Raised when four angular momenta admit no (j12, j23) pair."""
    pass


class OracleRangeExceeded(SpinScreenError):
    """Raised when the brute-force oracle is asked for entries above its guard."""
    pass


class InvalidSchedule(SpinScreenError):
    """Raised when an R schedule is not strictly increasing or leaves the domain."""
    pass


class FactorialCapExceeded(SpinScreenError):
    """Raised when an exact evaluation needs a factorial above the table cap."""
    pass


class RecurrenceBreakdown(SpinScreenError):
    """Raised when the three-term recurrence produces zero or non-finite values."""

    def __init__(self, message: str, column: int = -1):
        super().__init__(message)
        self.column = column


class GeometryError(SpinScreenError):
    """Base exception for tetrahedron geometry operations."""
    pass


class NotATriangle(GeometryError):
    """Raised when three lengths violate the triangle inequality beyond tolerance."""
    pass


class OutOfScreen(GeometryError):
    """Raised when a ridge or volume maximum leaves the physical strip."""
    pass


class NoRoot(GeometryError):
    """Raised when a caustic line has no real crossing."""
    pass


class UnknownPreset(SpinScreenError, KeyError):
    """Raised when a figure preset name is not registered."""
    pass
