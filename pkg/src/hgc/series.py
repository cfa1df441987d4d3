"""Rising factorials and truncated hypergeometric series.

``truncated_F(d, m)`` is the sum of the terms k = 0..m inclusive, so the
``_{p-1}`` truncation has p terms.  The trailing 1 in beta supplies the k!.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .datum import HypergeometricDatum, lcm_denominator
from .errors import InvalidPrimeError, PoleError
from .padic import PadicNumber, split

GUARD_DIGITS = 3


def pochhammer(a: Fraction | int, k: int) -> Fraction:
    """(a)_k = a (a+1) ... (a+k-1)."""
    a = Fraction(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def _check_poles(d: HypergeometricDatum, m: int) -> None:
    for b in d.beta:
        if b.denominator == 1 and b <= 0 and -b < m:
            raise PoleError(f"(b)_k vanishes for b={b} at k={int(-b) + 1} <= {m}")


def truncated_F(d: HypergeometricDatum, m: int) -> Fraction:
    """Exact F(alpha, beta; lambda)_m over Q."""
    _check_poles(d, m)
    total = term = Fraction(1)
    for k in range(m):
        num = d.lam
        den = Fraction(1)
        for a in d.alpha:
            num *= a + k
        for b in d.beta:
            den *= b + k
        term = term * num / den
        total += term
    return total


def truncated_F_terms(d: HypergeometricDatum, m: int) -> list[Fraction]:
    _check_poles(d, m)
    out = [Fraction(1)]
    for k in range(m):
        num = d.lam
        den = Fraction(1)
        for a in d.alpha:
            num *= a + k
        for b in d.beta:
            den *= b + k
        out.append(out[-1] * num / den)
    return out


@dataclass(frozen=True)
class TruncatedSeriesValue:
    value: Fraction | PadicNumber
    terms_used: int
    min_term_valuation: int = 0


def _split_fraction(x: Fraction, p: int) -> tuple[int, int, int]:
    """x = p^v * un / ud with un, ud prime to p."""
    vn, un = split(x.numerator, p)
    vd, ud = split(x.denominator, p)
    return vn - vd, un, ud


def truncated_F_padic(d: HypergeometricDatum, m: int, p: int, N: int) -> TruncatedSeriesValue:
    """F(alpha, beta; lambda)_m in Q_p, term by term.

    Valuations of the rising factorials are tracked exactly; unit parts are
    carried modulo p^(N - min(0, min term valuation) + guard), so the result
    is guaranteed to absolute precision at least N.  Negative valuations are
    reported, never rejected.
    """
    if lcm_denominator(d) % p == 0:
        raise InvalidPrimeError(f"p={p} divides the level of {d}")
    if m >= p**6:
        raise ValueError("truncation beyond p^6 is outside desk scale")
    _check_poles(d, m)
    if d.lam == 0:
        return TruncatedSeriesValue(PadicNumber.from_rational(1, p, N), m)

    lam_v, lam_n, lam_d = _split_fraction(d.lam, p)
    # pass 1: exact valuations of every term
    vals = [0]
    steps: list[tuple[int, int, int]] = []
    for k in range(m):
        v, un, ud = lam_v, lam_n, lam_d
        for a in d.alpha:
            x = a + k
            if x == 0:
                # every later term vanishes
                steps.append((0, 0, 1))
                break
            dv, n_, d_ = _split_fraction(x, p)
            v += dv
            un *= n_
            ud *= d_
        else:
            for b in d.beta:
                dv, n_, d_ = _split_fraction(b + k, p)
                v -= dv
                un *= d_
                ud *= n_
            steps.append((v, un, ud))
            vals.append(vals[-1] + v)
            continue
        break
    min_v = min(vals)
    rel = N - min(0, min_v) + GUARD_DIGITS
    mod = p**rel
    # pass 2: unit parts mod p^rel, summed at scale p^(-min_v)
    scale_mod = p ** (N - min_v + GUARD_DIGITS)
    total = 0
    unit = 1
    for k, val in enumerate(vals):
        if k:
            _, un, ud = steps[k - 1]
            unit = unit * un % mod * pow(ud, -1, mod) % mod
        total = (total + unit * p ** (val - min_v)) % scale_mod
    # every term is known to absolute precision val + rel >= N
    prec = min(v + rel for v in vals)
    value = PadicNumber(p, min_v, total, min_v + (N - min_v + GUARD_DIGITS)).reduce(prec)
    return TruncatedSeriesValue(value, m, min_v)
