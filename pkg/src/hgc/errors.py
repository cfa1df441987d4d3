"""Exception types shared across the package."""

from __future__ import annotations


class HGCError(Exception):
    """Base class for all package errors."""


class InvalidPrimeError(HGCError, ValueError):
    """The prime divides a denominator, is even, or is not prime."""


class PrecisionError(HGCError, ArithmeticError):
    """Guaranteed precision is too low to decide the requested question."""


class PoleError(HGCError, ZeroDivisionError):
    """A rising factorial in a denominator vanishes."""


class NotApplicableError(HGCError, ValueError):
    """A construction's hypothesis fails (e.g. disconnected bottom interval)."""


class NotOrdinaryError(HGCError, ValueError):
    """The prime is not ordinary for the datum, so no unit root exists."""


class ConsistencyError(HGCError, ArithmeticError):
    """An internal self-check failed (non-integral Euler coefficient, ...)."""


class NotDegenerateError(HGCError, ValueError):
    """No linear factor of the expected shape divides the Euler factor."""


class MissingFixtureError(HGCError, LookupError):
    """A modular form coefficient is not cached and network is disabled."""


class TransportError(HGCError, OSError):
    """A network fetch failed."""
