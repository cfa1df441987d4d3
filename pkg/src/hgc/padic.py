"""Fixed-precision p-adic numbers, Dwork's dash map and Morita's Gamma_p.

A :class:`PadicNumber` is ``unit * p**val`` known modulo ``p**prec`` (absolute
precision).  Every operation propagates the worst-case precision so that a
congruence verdict is never an artifact of truncation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidPrimeError, PrecisionError


def valuation(n: int, p: int) -> int:
    """v_p of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def split(n: int, p: int) -> tuple[int, int]:
    """Return (v, u) with n = u * p**v and p not dividing u (n != 0)."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def rational_valuation(x: Fraction, p: int) -> int:
    return valuation(x.numerator, p) - valuation(x.denominator, p)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def primes_between(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 2), hi + 1) if is_prime(q)]


def symmetric_residue(x: int, m: int) -> int:
    x %= m
    return x - m if 2 * x > m else x


class PadicNumber:
    """Element of Q_p known to absolute precision ``prec``.

    Zero to precision ``prec`` is stored with ``unit == 0`` and ``val == prec``.
    """

    __slots__ = ("p", "prec", "val", "unit")

    def __init__(self, p: int, val: int, unit: int, prec: int):
        self.p = p
        self.prec = prec
        if unit == 0 or val >= prec:
            self.val, self.unit = prec, 0
            return
        w, u = split(unit, p)
        val += w
        if val >= prec:
            self.val, self.unit = prec, 0
            return
        self.val = val
        self.unit = u % p ** (prec - val)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, x: Fraction | int, p: int, prec: int) -> PadicNumber:
        x = Fraction(x)
        if x == 0:
            return cls(p, prec, 0, prec)
        vn, un = split(x.numerator, p)
        vd, ud = split(x.denominator, p)
        val = vn - vd
        rel = prec - val
        if rel <= 0:
            return cls(p, prec, 0, prec)
        m = p**rel
        return cls(p, val, un * pow(ud, -1, m) % m, prec)

    @classmethod
    def zero(cls, p: int, prec: int) -> PadicNumber:
        return cls(p, prec, 0, prec)

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        """Indistinguishable from zero at the current precision."""
        return self.unit == 0

    @property
    def relative_precision(self) -> int:
        return self.prec - self.val

    def residue(self, c: int | None = None) -> int:
        """Integer representative modulo p**c (default: the full precision)."""
        c = self.prec if c is None else c
        if c > self.prec:
            raise PrecisionError(f"asked for residue mod p^{c}, only p^{self.prec} known")
        if self.val < 0:
            raise ValueError("value is not p-integral")
        m = self.p**c
        return self.unit * self.p**self.val % m

    def to_fraction(self) -> Fraction:
        """Lift to a rational using the symmetric residue of the unit part."""
        if self.is_zero:
            return Fraction(0)
        m = self.p ** (self.prec - self.val)
        u = symmetric_residue(self.unit, m)
        return Fraction(u) * Fraction(self.p) ** self.val

    def lift_integer(self, shift: int = 0) -> int:
        """Symmetric integer representative of ``p**shift * self`` mod p**(prec+shift)."""
        if self.val + shift < 0:
            raise ValueError("value times p^shift is not integral")
        m = self.p ** (self.prec + shift)
        return symmetric_residue(self.unit * self.p ** (self.val + shift), m)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: PadicNumber | Fraction | int) -> PadicNumber:
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise ValueError(f"mixing primes {self.p} and {other.p}")
            return other
        # Exact constants inherit plenty of precision.
        return PadicNumber.from_rational(Fraction(other), self.p, self.prec + abs(self.val) + 64)

    def __add__(self, other):
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        v = min(self.val, o.val)
        if v >= prec:
            return PadicNumber.zero(self.p, prec)
        p = self.p
        m = p ** (prec - v)
        s = (self.unit * p ** (self.val - v) + o.unit * p ** (o.val - v)) % m
        return PadicNumber(p, v, s, prec)

    __radd__ = __add__

    def __neg__(self) -> PadicNumber:
        return PadicNumber(self.p, self.val, -self.unit, self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        prec = min(self.prec + o.val, o.prec + self.val)
        return PadicNumber(self.p, self.val + o.val, self.unit * o.unit, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_zero:
            raise ZeroDivisionError("division by a p-adic zero")
        val = self.val - o.val
        if self.is_zero:
            return PadicNumber.zero(self.p, self.prec - o.val)
        rel = min(self.relative_precision, o.relative_precision)
        m = self.p**rel
        return PadicNumber(self.p, val, self.unit * pow(o.unit, -1, m), val + rel)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int) -> PadicNumber:
        if k < 0:
            return PadicNumber.from_rational(1, self.p, self.prec - 2 * self.val + 64) / self**-k
        if k == 0:
            return PadicNumber.from_rational(1, self.p, self.relative_precision)
        if self.is_zero:
            return PadicNumber.zero(self.p, self.prec + (k - 1) * self.val)
        rel = self.relative_precision
        return PadicNumber(self.p, k * self.val, pow(self.unit, k, self.p**rel), k * self.val + rel)

    def mul_p_power(self, k: int) -> PadicNumber:
        """Exact multiplication by p**k (no precision loss)."""
        if self.is_zero:
            return PadicNumber.zero(self.p, self.prec + k)
        return PadicNumber(self.p, self.val + k, self.unit, self.prec + k)

    def reduce(self, prec: int) -> PadicNumber:
        """Forget digits beyond absolute precision ``prec``."""
        if prec >= self.prec:
            return self
        return PadicNumber(self.p, self.val, self.unit, prec)

    # -- comparison --------------------------------------------------------

    def congruent(self, other: PadicNumber | Fraction | int, c: int) -> bool:
        """Decide self == other mod p**c, refusing if precision is short."""
        o = self._coerce(other)
        if min(self.prec, o.prec) < c:
            raise PrecisionError(
                f"congruence mod p^{c} needs precision {c}, have {self.prec} and {o.prec}"
            )
        return (self - o).val >= c

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PadicNumber):
            return NotImplemented
        return (self.p, self.prec, self.val, self.unit) == (other.p, other.prec, other.val, other.unit)

    def __hash__(self) -> int:
        return hash((self.p, self.prec, self.val, self.unit))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"O({self.p}^{self.prec})"
        return f"{self.unit}*{self.p}^{self.val} + O({self.p}^{self.prec})"

    def __str__(self) -> str:
        if self.is_zero:
            return f"O({self.p}^{self.prec})"
        return f"{self.to_fraction()} + O({self.p}^{self.prec})"


# -- digits and the dash map -------------------------------------------------


def _check_unit_denominator(r: Fraction, p: int) -> None:
    if r.denominator % p == 0:
        raise InvalidPrimeError(f"p={p} divides the denominator of {r}")


def residue_mod_p(r: Fraction | int, p: int) -> int:
    r = Fraction(r)
    _check_unit_denominator(r, p)
    return r.numerator * pow(r.denominator, -1, p) % p


def first_digit(r: Fraction | int, p: int) -> int:
    """[r]_0: the integer in [0, p-1] congruent to r mod p."""
    return residue_mod_p(r, p)


def dash(r: Fraction | int, p: int) -> Fraction:
    """Dwork's dash map r' = (r + [-r]_0) / p."""
    r = Fraction(r)
    return (r + first_digit(-r, p)) / p


def a0(x: Fraction | int, p: int) -> int:
    """The integer in [1, p] congruent to x mod p."""
    return residue_mod_p(x, p) or p


# -- Morita p-adic Gamma -------------------------------------------------------
#
# Gamma_p(n) = (-1)^n * prod_{0<j<n, p∤j} j.  The product of units below L is
# assembled digit by digit: level l contributes one polynomial evaluation at
# floor(L / p^(l+1)), the polynomial being the product of p^l consecutive
# unit blocks, truncated modulo p^K (the x^i coefficient is divisible by
# p^((l+1)i), so the truncation is exact).


def _trim(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _pmul(f: list[int], g: list[int], K: int, mod: int) -> list[int]:
    out = [0] * min(len(f) + len(g) - 1, K)
    for i, fi in enumerate(f):
        if fi == 0:
            continue
        for j in range(min(len(g), K - i)):
            out[i + j] += fi * g[j]
    return _trim([c % mod for c in out])


def _pshift(f: list[int], p: int, c: int, K: int, mod: int) -> list[int]:
    """Coefficients of f(p x + c), truncated to degree < K."""
    out = [0]
    for coef in reversed(f):
        # out = out * (p x + c) + coef
        nxt = [0] * min(len(out) + 1, K)
        for i, o in enumerate(out):
            nxt[i] += o * c
            if i + 1 < K:
                nxt[i + 1] += o * p
        nxt[0] += coef
        out = [x % mod for x in nxt]
    return _trim(out)


def _peval(f: list[int], x: int, mod: int) -> int:
    acc = 0
    for coef in reversed(f):
        acc = (acc * x + coef) % mod
    return acc


class _UnitFactorialTable:
    def __init__(self, p: int, K: int):
        self.p, self.K = p, K
        mod = self.mod = p**K
        prefix0 = [[1]]
        for i in range(1, p):
            prefix0.append(_pmul(prefix0[-1], [i, p], K, mod))
        self.levels = [prefix0]
        block = prefix0[-1]
        for _ in range(1, K):
            shifted = [_pshift(block, p, c, K, mod) for c in range(p)]
            prefix = [[1]]
            for c in range(p - 1):
                prefix.append(_pmul(prefix[-1], shifted[c], K, mod))
            block = _pmul(prefix[-1], shifted[p - 1], K, mod)
            self.levels.append(prefix)

    def unit_product(self, L: int) -> int:
        """prod_{1<=j<=L, p∤j} j mod p^K, for 0 <= L < p^K."""
        p, mod = self.p, self.mod
        acc = 1
        level = 0
        while L:
            L, d = divmod(L, p)
            if d:
                acc = acc * _peval(self.levels[level][d], L, mod) % mod
            level += 1
        return acc


_TABLES: dict[int, _UnitFactorialTable] = {}


def _table(p: int, K: int) -> _UnitFactorialTable:
    t = _TABLES.get(p)
    if t is None or t.K < K:
        t = _UnitFactorialTable(p, max(K, 4))
        _TABLES[p] = t
    return t


def gamma_p_integer(n: int, p: int, N: int) -> int:
    """Gamma_p(n) mod p^N for an integer 0 <= n (exact Morita product)."""
    if n == 0:
        return 1
    t = _table(p, N)
    big = p**t.K
    if n > big:
        # continuity: Gamma_p(n) depends only on n mod p^K
        n = (n - 1) % big + 1
    mod = p**N
    v = t.unit_product(n - 1) % mod
    return (-v if n % 2 else v) % mod


@lru_cache(maxsize=1 << 18)
def _gamma_residue(num: int, den: int, p: int, N: int) -> int:
    mod = p**N
    n = num * pow(den, -1, mod) % mod
    if n == 0:
        n = mod
    return gamma_p_integer(n, p, N)


def gamma_p_residue(x: Fraction | int, p: int, N: int) -> int:
    """Gamma_p(x) mod p^N as an integer in [0, p^N)."""
    x = Fraction(x)
    if p == 2:
        raise InvalidPrimeError("Gamma_p is implemented for odd p only")
    _check_unit_denominator(x, p)
    return _gamma_residue(x.numerator, x.denominator, p, N)


def gamma_p(x: Fraction | int, p: int, N: int) -> PadicNumber:
    """Morita's Gamma_p(x) to absolute precision N (always a unit)."""
    return PadicNumber(p, 0, gamma_p_residue(x, p, N), N)


def teichmuller_residue(x: int, p: int, N: int) -> int:
    if x % p == 0:
        raise ValueError(f"{x} is not a unit mod {p}")
    return pow(x, p ** (N - 1), p**N)


def teichmuller(x: int | Fraction, p: int, N: int) -> PadicNumber:
    """The (p-1)-th root of unity congruent to x mod p."""
    x = residue_mod_p(x, p)
    return PadicNumber(p, 0, teichmuller_residue(x, p, N), N)
