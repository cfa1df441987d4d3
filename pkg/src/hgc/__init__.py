"""Hypergeometric character sums, truncated series and their supercongruences."""

from __future__ import annotations

from .datum import ALIASES, HypergeometricDatum, parse_datum
from .errors import HGCError

__all__ = ["ALIASES", "HGCError", "HypergeometricDatum", "parse_datum"]
__version__ = "0.1.0"
