"""Exact rationals, parameter multisets and hypergeometric data."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidPrimeError

Rational = Fraction


def as_fraction(x: int | str | Fraction) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def frac_part(x: Fraction) -> Fraction:
    """Fractional part {x} in [0, 1)."""
    return x - math.floor(x)


def canonical(values: Iterable[int | str | Fraction]) -> tuple[Fraction, ...]:
    return tuple(sorted(as_fraction(v) for v in values))


@dataclass(frozen=True)
class HypergeometricDatum:
    """The triple {alpha, beta; lambda}.

    Multisets are stored as sorted tuples so equal multisets compare and hash
    equal.  Entries are kept as given (e.g. 7/6 in a shifted beta) unless
    ``normalize=True`` is passed to :meth:`make`, which reduces alpha into
    [0, 1).
    """

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    lam: Fraction = Fraction(1)
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.alpha) != len(self.beta) or not self.alpha:
            raise ValueError(
                f"alpha and beta must have the same positive size, got {len(self.alpha)} and {len(self.beta)}"
            )

    @classmethod
    def make(
        cls,
        alpha: Iterable[int | str | Fraction],
        beta: Iterable[int | str | Fraction],
        lam: int | str | Fraction = 1,
        *,
        normalize: bool = False,
        name: str | None = None,
    ) -> HypergeometricDatum:
        a = canonical(alpha)
        if normalize:
            a = canonical(frac_part(x) for x in a)
        return cls(a, canonical(beta), as_fraction(lam), name)

    @property
    def n(self) -> int:
        return len(self.alpha)

    def with_lambda(self, lam: int | str | Fraction) -> HypergeometricDatum:
        return HypergeometricDatum(self.alpha, self.beta, as_fraction(lam), self.name)

    def with_beta(self, beta: Iterable[int | str | Fraction]) -> HypergeometricDatum:
        return HypergeometricDatum(self.alpha, canonical(beta), self.lam, None)

    def with_alpha(self, alpha: Iterable[int | str | Fraction]) -> HypergeometricDatum:
        return HypergeometricDatum(canonical(alpha), self.beta, self.lam, None)

    def __str__(self) -> str:
        return format_datum(self)


def lcm_denominator(d: HypergeometricDatum) -> int:
    """The level M: lcm of every denominator among alpha, beta and lambda."""
    return math.lcm(*(x.denominator for x in (*d.alpha, *d.beta, d.lam)))


def is_defined_over_Q(s: Sequence[Fraction]) -> bool:
    """True iff prod (X - e^{2 pi i a}) has integer coefficients.

    Equivalent to the multiset of fractional parts being stable under
    a -> {t a} for every t prime to the common denominator.
    """
    parts = sorted(frac_part(as_fraction(a)) for a in s)
    den = math.lcm(*(a.denominator for a in parts)) if parts else 1
    for t in range(2, den):
        if math.gcd(t, den) == 1 and sorted(frac_part(t * a) for a in parts) != parts:
            return False
    return True


def satisfies_diamond(d: HypergeometricDatum) -> bool:
    """Condition (diamond): 0 <= a < 1, 0 < b <= 1, both sides defined over Q,
    and no a_i - b_j is an integer."""
    if not all(0 <= a < 1 for a in d.alpha):
        return False
    if not all(0 < b <= 1 for b in d.beta):
        return False
    if not (is_defined_over_Q(d.alpha) and is_defined_over_Q(d.beta)):
        return False
    return all((a - b).denominator != 1 for a in d.alpha for b in d.beta)


def dash_image(s: Sequence[Fraction], p: int) -> tuple[Fraction, ...]:
    from .padic import dash

    for x in s:
        if x.denominator % p == 0:
            raise InvalidPrimeError(f"p={p} divides the denominator of {x}")
    return canonical(dash(x, p) for x in s)


# -- text format ---------------------------------------------------------

_FIELD = re.compile(r"^\s*(alpha|beta|lambda)\s*=\s*(.*?)\s*$", re.IGNORECASE)


def parse_datum(text: str) -> HypergeometricDatum:
    """Parse ``alpha=1/2,1/2; beta=1,1; lambda=1``.

    Whitespace is ignored; ``lambda`` defaults to 1.  Named aliases (``H1``,
    ``H2``, ``H5`` ... ``H8``) are accepted as well.
    """
    key = text.strip()
    if key.upper() in ALIASES:
        return ALIASES[key.upper()]
    parts: dict[str, str] = {}
    for chunk in key.split(";"):
        if not chunk.strip():
            continue
        m = _FIELD.match(chunk)
        if m is None:
            raise ValueError(f"cannot parse datum field {chunk!r}")
        parts[m.group(1).lower()] = m.group(2)
    if "alpha" not in parts or "beta" not in parts:
        raise ValueError("datum needs both alpha= and beta=")

    def nums(s: str) -> list[Fraction]:
        return [Fraction(tok.replace(" ", "")) for tok in s.split(",") if tok.strip()]

    lam = Fraction(parts.get("lambda", "1").replace(" ", ""))
    return HypergeometricDatum.make(nums(parts["alpha"]), nums(parts["beta"]), lam)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_datum(d: HypergeometricDatum) -> str:
    a = ",".join(_fmt(x) for x in d.alpha)
    b = ",".join(_fmt(x) for x in d.beta)
    return f"alpha={a}; beta={b}; lambda={_fmt(d.lam)}"


def _F(*xs: str) -> list[Fraction]:
    return [Fraction(x) for x in xs]


# Magma variable names used in the Euler-factor transcripts, with the
# argument each one is evaluated at.
ALIASES: dict[str, HypergeometricDatum] = {
    "H1": HypergeometricDatum.make(
        _F("1/2", "1/2", "1/2", "1/2", "1/3", "2/3"), _F("1", "1", "1", "1", "1/6", "5/6"), 1, name="H1"
    ),
    "H2": HypergeometricDatum.make(_F("1/2", "1/2", "1/3", "2/3"), _F("1", "1", "1", "1"), 1, name="H2"),
    "H5": HypergeometricDatum.make(_F("1/2", "1/2", "1/2", "1/2", "1/2"), _F("1", "1", "1", "1", "1"), -1, name="H5"),
    "H6": HypergeometricDatum.make(_F("1/2", "1/2", "1/2"), _F("1", "1", "1"), 1, name="H6"),
    "H7": HypergeometricDatum.make(
        _F("1/2", "1/2", "1/2", "1/3", "2/3"), _F("1", "1", "1", "1/6", "5/6"), -1, name="H7"
    ),
    "H8": HypergeometricDatum.make(_F("1/2", "1/3", "2/3"), _F("1", "1", "1"), 1, name="H8"),
}
