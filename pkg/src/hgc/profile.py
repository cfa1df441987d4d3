"""The exponent step function e(k) and the quantities read off from it.

``e(k) = sum_i -floor(a_i - k/(p-1)) - floor(k/(p-1) + {b_i})`` depends on k
only through x = k/(p-1); :func:`profile` works with x directly (the p-free
picture used in the step plots) and :func:`profile_at_p` with integer k.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Literal

from .datum import HypergeometricDatum, frac_part, lcm_denominator
from .errors import InvalidPrimeError, NotApplicableError
from .padic import a0, first_digit


def nu(a: int, x: Fraction | int, p: int) -> int:
    """nu(a, x): 0 if a <= x, 1 if x < a < p, for 0 <= x <= p - 1.

    This is -floor((x - a) / (p - 1)) except at x - a = p - 1 (x = p - 1,
    a = 0), where the floor would give -1; the case rule is the one the
    digit identities rely on.  Outside [0, p - 1] the floor form is used.
    """
    if not 0 <= a < p:
        raise ValueError(f"nu needs 0 <= a < p, got a={a}")
    if 0 <= x <= p - 1:
        return 0 if a <= x else 1
    return -math.floor(Fraction(x - a) / (p - 1))


def e_at(d: HypergeometricDatum, x: Fraction) -> int:
    """e as a function of the normalized variable x = k/(p-1)."""
    return sum(-math.floor(a - x) for a in d.alpha) - sum(math.floor(x + frac_part(b)) for b in d.beta)


def e_function(d: HypergeometricDatum, p: int, k: int) -> int:
    if lcm_denominator(d) % p == 0:
        raise InvalidPrimeError(f"p={p} divides the level of {d}")
    return e_at(d, Fraction(k, p - 1))


Interval = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Piece:
    """e is constant on a single point (lo == hi) or an open interval."""

    lo: Fraction
    hi: Fraction
    e: int

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class Profile:
    breakpoints: tuple[Fraction, ...]
    e_values: tuple[int, ...]  # value on each open interval between breakpoints (last one ends at 1)
    pieces: tuple[Piece, ...]
    s: int
    w: int
    bottom: tuple[Interval, ...]
    connected: bool
    t_parity: int | None = None  # None in the p-free picture
    hat_alpha: tuple[Fraction, ...] | None = None
    breve_beta: tuple[Fraction, ...] | None = None

    @property
    def max_e(self) -> int:
        return self.s + self.w


def _breakpoints(d: HypergeometricDatum) -> list[Fraction]:
    pts = {Fraction(0)}
    pts.update(frac_part(a) for a in d.alpha)
    for b in d.beta:
        fb = frac_part(b)
        if fb:
            pts.add(1 - fb)
    return sorted(x for x in pts if 0 <= x < 1)


def _merge_bottom(pieces: list[Piece], s: int) -> list[Interval]:
    runs: list[list[Fraction]] = []
    prev_in = False
    for pc in pieces:
        if pc.e == s:
            if prev_in:
                runs[-1][1] = pc.hi
            else:
                runs.append([pc.lo, pc.hi])
        prev_in = pc.e == s
    return [(lo, hi) for lo, hi in runs]


def _hat_breve_at(d: HypergeometricDatum, x: Fraction) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    # nu(k, (p-1)a) = 1 iff (p-1)a < k iff a < x
    hat = tuple(sorted(a + (1 if a < x else 0) for a in d.alpha))
    breve = tuple(sorted(b + math.floor(x + frac_part(1 - b)) for b in d.beta))
    return hat, breve


def profile(d: HypergeometricDatum, p: int | None = None) -> Profile:
    """p-free profile of e on [0, 1).

    The value of e is evaluated at every breakpoint and at the midpoint of
    every gap between consecutive breakpoints.  When ``p`` is given, the
    parity of t is filled in as well.
    """
    bps = _breakpoints(d)
    pieces: list[Piece] = []
    gaps: list[int] = []
    ends = bps + [Fraction(1)]
    for lo, hi in zip(bps, ends[1:]):
        pieces.append(Piece(lo, lo, e_at(d, lo)))
        ge = e_at(d, (lo + hi) / 2)
        gaps.append(ge)
        pieces.append(Piece(lo, hi, ge))
    values = [pc.e for pc in pieces]
    s, top = min(values), max(values)
    bottom = _merge_bottom(pieces, s)
    hat = breve = None
    if len(bottom) == 1:
        choices = {_hat_breve_at(d, pc.lo if pc.is_point else (pc.lo + pc.hi) / 2) for pc in pieces if pc.e == s}
        if len(choices) == 1:
            hat, breve = choices.pop()
    t_par = None if p is None else t_sum(d.beta, p) % 2
    return Profile(tuple(bps), tuple(gaps), tuple(pieces), s, top - s, tuple(bottom), len(bottom) == 1, t_par, hat, breve)


@dataclass(frozen=True)
class PrimeProfile:
    """The same data indexed by integer k in [0, p-2]."""

    p: int
    e: tuple[int, ...]
    s: int
    w: int
    bottom: tuple[tuple[int, int], ...]
    connected: bool
    t: int


def profile_at_p(d: HypergeometricDatum, p: int) -> PrimeProfile:
    if lcm_denominator(d) % p == 0:
        raise InvalidPrimeError(f"p={p} divides the level of {d}")
    es = tuple(e_function(d, p, k) for k in range(p - 1))
    s = min(es)
    runs: list[list[int]] = []
    for k, e in enumerate(es):
        if e == s:
            if runs and runs[-1][1] == k - 1:
                runs[-1][1] = k
            else:
                runs.append([k, k])
    return PrimeProfile(p, es, s, max(es) - s, tuple((a, b) for a, b in runs), len(runs) == 1, t_sum(d.beta, p))


def hat_breve(d: HypergeometricDatum, p: int | None = None) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """(alpha-hat, beta-breve) for any k in the bottom interval.

    Raises NotApplicableError when the bottom interval is disconnected; the
    result is checked to be independent of the chosen k.
    """
    if p is None:
        pr = profile(d)
        if not pr.connected:
            raise NotApplicableError(f"bottom interval is disconnected: {_fmt_intervals(pr.bottom)}")
        xs = [pc.lo if pc.is_point else (pc.lo + pc.hi) / 2 for pc in pr.pieces if pc.e == pr.s]
    else:
        pp = profile_at_p(d, p)
        if not pp.connected:
            raise NotApplicableError(f"bottom interval is disconnected at p={p}: {pp.bottom}")
        lo, hi = pp.bottom[0]
        xs = [Fraction(k, p - 1) for k in range(lo, hi + 1)]
    results = {_hat_breve_at(d, x) for x in xs}
    if len(results) != 1:
        raise AssertionError(f"hat/breve parameters depend on k within the bottom interval: {results}")
    return results.pop()


def _fmt_intervals(iv) -> str:
    return " U ".join(f"[{lo}, {hi}]" for lo, hi in iv)


def t_sum(beta, p: int) -> int:
    """t = sum of a_0(b_i)."""
    return sum(a0(b, p) for b in beta)


def lemma_nu_identity(k: int, a: Fraction, p: int) -> bool:
    """nu(k, (p-1) a') == nu(k, [-a - nu(k, (p-1) a)]_0)."""
    from .padic import dash

    lhs = nu(k, (p - 1) * dash(a, p), p)
    rhs = nu(k, first_digit(-a - nu(k, (p - 1) * a, p), p), p)
    return lhs == rhs


# -- export --------------------------------------------------------------------


def _steps(pr: Profile) -> list[tuple[Fraction, Fraction, int]]:
    """Maximal runs of constant e as (start, end, e); points merge into neighbours."""
    rows: list[list] = []
    for pc in pr.pieces:
        if rows and rows[-1][2] == pc.e:
            rows[-1][1] = pc.hi
        else:
            rows.append([pc.lo, pc.hi, pc.e])
    return [(a, b, e) for a, b, e in rows]


def export_profile_plot(pr: Profile, fmt: Literal["csv", "svg"], path: str | Path) -> Path:
    path = Path(path)
    if fmt == "csv":
        with path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["x_start", "x_end", "e"])
            for a, b, e in _steps(pr):
                w.writerow([str(a), str(b), e])
    elif fmt == "svg":
        path.write_text(render_svg(pr))
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return path


def render_svg(pr: Profile, width: int = 400, height: int = 240) -> str:
    lo_e, hi_e = pr.s, pr.s + pr.w
    margin = 30
    span = max(hi_e - lo_e, 1)

    def X(x: Fraction) -> float:
        return margin + float(x) * (width - 2 * margin)

    def Y(e: int) -> float:
        return height - margin - (e - lo_e) / span * (height - 2 * margin)

    pts: list[str] = []
    for pc in pr.pieces:
        if pc.is_point:
            continue
        pts.append(f"{X(pc.lo):.2f},{Y(pc.e):.2f}")
        pts.append(f"{X(pc.hi):.2f},{Y(pc.e):.2f}")
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
        f'  <line x1="{margin}" y1="{height - margin}" x2="{width - margin}" y2="{height - margin}" stroke="#888"/>\n'
        f'  <polyline fill="none" stroke="black" stroke-width="2" points="{" ".join(pts)}"/>\n'
        f"</svg>\n"
    )
