"""Finite hypergeometric sums H_q(alpha, beta; lambda).

Three evaluators:

* :func:`hq_complex` -- the Gauss-sum definition in high-precision complex
  arithmetic over an explicit finite field (the independent oracle);
* :func:`hp_padic` -- the Gamma_p form for q = p obtained from Gross-Koblitz;
* :func:`hq_general` -- the digit-wise Gamma_p form for any q = p^e, which
  also covers q not congruent to 1 mod M.

All Gauss sums are normalized so that pi_p never appears: every power of
pi_p is a power of pi_p^(p-1) = -p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .datum import HypergeometricDatum, frac_part, is_defined_over_Q, lcm_denominator, satisfies_diamond
from .errors import InvalidPrimeError, PrecisionError
from .padic import PadicNumber, gamma_p_residue, is_prime, residue_mod_p, teichmuller_residue
from .profile import e_function, profile

# -- finite fields ----------------------------------------------------------------


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    """Product of two coefficient lists (low degree first) reduced mod a monic modulus."""
    e = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    for deg in range(len(out) - 1, e - 1, -1):
        c = out[deg] % p
        if c:
            for i in range(e + 1):
                out[deg - e + i] -= c * modulus[i]
    res = [x % p for x in out[:e]]
    return res + [0] * (e - len(res))


def _is_irreducible(f: list[int], p: int) -> bool:
    """Brute-force irreducibility: no monic factor of degree <= deg/2."""
    e = len(f) - 1
    if e == 1:
        return True
    # x^(p^i) mod f for i <= e/2 must not share a factor with x: use Ben-Or style gcd test
    x = [0, 1] + [0] * (e - 2)
    xp = x
    for _ in range(1, e // 2 + 1):
        xp = _poly_powmod(xp, p, f, p)
        diff = [(xp[i] - (x[i] if i < len(x) else 0)) % p for i in range(e)]
        if _poly_gcd_degree(f, diff, p) > 0:
            return False
    return True


def _poly_powmod(a: list[int], k: int, f: list[int], p: int) -> list[int]:
    e = len(f) - 1
    result = [1] + [0] * (e - 1)
    base = a
    while k:
        if k & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        k >>= 1
    return result


def _poly_trim(a: list[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_gcd_degree(a: list[int], b: list[int], p: int) -> int:
    a, b = _poly_trim([x % p for x in a]), _poly_trim([x % p for x in b])
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, y in enumerate(b):
                a[shift + i] = (a[shift + i] - c * y) % p
            a = _poly_trim(a)
        a, b = b, a
    return len(a) - 1


def first_irreducible(p: int, e: int, skip: int = 0) -> list[int]:
    """First monic irreducible of degree e in lexicographic order of its coefficients."""
    found = 0
    for code in range(p**e):
        coeffs = [(code // p**i) % p for i in range(e)]
        f = coeffs + [1]
        if e > 1 and coeffs[0] == 0:
            continue
        if _is_irreducible(f, p):
            if found == skip:
                return f
            found += 1
    raise ValueError(f"no irreducible polynomial of degree {e} over F_{p}")


@dataclass
class FiniteFieldTable:
    """F_q as F_p[X]/(modulus) with exponent, discrete-log and trace tables.

    Elements are encoded as integers sum c_i p^i for the coefficient vector.
    """

    p: int
    e: int
    modulus: list[int]
    generator: int
    exp: list[int]  # exp[m] = code of g^m
    log: dict[int, int]
    trace: dict[int, int]

    @property
    def q(self) -> int:
        return self.p**self.e

    def element(self, x: int) -> int:
        """Code of the prime-field element x mod p."""
        return x % self.p


def _decode(code: int, p: int, e: int) -> list[int]:
    return [(code // p**i) % p for i in range(e)]


def _encode(v: list[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(v))


@lru_cache(maxsize=32)
def finite_field(p: int, e: int, variant: int = 0) -> FiniteFieldTable:
    """Build F_{p^e}.  ``variant`` picks the (variant+1)-th irreducible modulus
    and the (variant+1)-th smallest generator, to test choice independence."""
    if not is_prime(p):
        raise InvalidPrimeError(f"{p} is not prime")
    f = first_irreducible(p, e, skip=variant if e > 1 else 0)
    q = p**e
    order = q - 1
    factors = [r for r in range(2, order + 1) if order % r == 0 and is_prime(r)]
    seen = 0
    for code in range(1, q):
        v = _decode(code, p, e)
        if all(_poly_powmod(v, order // r, f, p) != [1] + [0] * (e - 1) for r in factors):
            if seen == variant:
                gen = code
                break
            seen += 1
    else:  # pragma: no cover
        raise ValueError("no generator found")
    g = _decode(gen, p, e)
    exp = []
    cur = [1] + [0] * (e - 1)
    for _ in range(order):
        exp.append(_encode(cur, p))
        cur = _poly_mulmod(cur, g, f, p)
    log = {c: m for m, c in enumerate(exp)}
    if len(log) != order:
        raise AssertionError("generator does not have full order")
    # Tr(X^i) are the Newton power sums of the roots of f
    power_sums = _newton_power_sums(f, p, e)
    trace = {}
    for code in range(q):
        v = _decode(code, p, e)
        trace[code] = sum(c * power_sums[i] for i, c in enumerate(v)) % p
    return FiniteFieldTable(p, e, f, gen, exp, log, trace)


def _newton_power_sums(f: list[int], p: int, e: int) -> list[int]:
    """P_i = sum of i-th powers of the roots of monic f, for i = 0..e-1."""
    # f = x^e + c_{e-1} x^{e-1} + ... ; elementary symmetric e_k = (-1)^k c_{e-k}
    el = [1] + [((-1) ** k * f[e - k]) % p for k in range(1, e + 1)]
    P = [e % p]
    for i in range(1, e):
        s = 0
        for k in range(1, i):
            s += (-1) ** (k - 1) * el[k] * P[i - k]
        s += (-1) ** (i - 1) * i * el[i]
        P.append(s % p)
    return P


# -- complex oracle ------------------------------------------------------------------


@dataclass(frozen=True)
class CharSumValue:
    q: int
    method: str
    exact: Fraction | None = None
    padic: PadicNumber | None = None
    residual: float | None = None
    error_bound: float | None = None


def gauss_sums_complex(tbl: FiniteFieldTable, precision_bits: int = 256, psi_scale: int = 1):
    """All Gauss sums g(omega^j), j = 0..q-2, and a bound on their absolute error.

    omega(g^m) = exp(2 pi i m / (q-1)), Psi(x) = exp(2 pi i Tr(c x) / p) with
    c = ``psi_scale``; A(0) = 0.
    """
    q, p = tbl.q, tbl.p
    order = q - 1
    with mpmath.workprec(precision_bits + 20):
        zq = [mpmath.expjpi(mpmath.mpf(2 * t) / order) for t in range(order)]
        zp = [mpmath.expjpi(mpmath.mpf(2 * u) / p) for u in range(p)]
        c_code = tbl.exp[tbl.log[tbl.element(psi_scale)]] if psi_scale % p else None
        if c_code is None:
            raise ValueError("psi_scale must be a unit")
        cl = tbl.log[c_code]
        add = [zp[tbl.trace[tbl.exp[(m + cl) % order]]] for m in range(order)]
        sums = []
        for j in range(order):
            acc = mpmath.mpc(0)
            for m in range(order):
                acc += add[m] * zq[j * m % order]
            sums.append(acc)
    err = 8.0 * q * 2.0 ** (-precision_bits)
    return sums, err


def gauss_sum_complex(tbl: FiniteFieldTable, j: int, precision_bits: int = 256):
    sums, err = gauss_sums_complex(tbl, precision_bits)
    return sums[j % (tbl.q - 1)], err


def _scale_exponent(d: HypergeometricDatum, e: int) -> int:
    return e * max(0, -profile(d).s)


def hq_complex(
    d: HypergeometricDatum,
    q: int,
    precision_bits: int = 256,
    *,
    variant: int = 0,
    psi_scale: int = 1,
    max_bits: int = 4096,
) -> CharSumValue:
    """Evaluate the Gauss-sum definition of H_q numerically and round it.

    The value is a rational whose denominator is a power of p; the rounding
    residual plus the propagated error bound must stay below 1e-6, otherwise
    the precision is doubled (up to ``max_bits``).
    """
    p, e = _prime_power(q)
    M = lcm_denominator(d)
    if (q - 1) % M:
        raise ValueError(f"q={q} is not 1 mod M={M}")
    if d.lam == 0:
        raise ValueError("lambda must be nonzero")
    tbl = finite_field(p, e, variant)
    order = q - 1
    n = d.n
    A = [int(a * order) % order for a in d.alpha]
    B = [int(b * order) % order for b in d.beta]
    lam_p = residue_mod_p((-1) ** n * d.lam, p)
    lam_log = tbl.log[tbl.element(lam_p)]
    den_exp = _scale_exponent(d, e)
    scale = p**den_exp
    bits = precision_bits
    while True:
        g, gerr = gauss_sums_complex(tbl, bits, psi_scale)
        with mpmath.workprec(bits + 20):
            zq = [mpmath.expjpi(mpmath.mpf(2 * t) / order) for t in range(order)]
            base = mpmath.mpc(1)
            for a in A:
                base /= g[a]
            for b in B:
                base /= g[-b % order]
            total = mpmath.mpc(0)
            for k in range(order):
                term = base
                for a in A:
                    term *= g[(k + a) % order]
                for b in B:
                    term *= g[(-k - b) % order]
                total += term * zq[k * lam_log % order]
            value = total / (1 - q)
            scaled = value * scale
            nearest = int(mpmath.nint(scaled.real))
            residual = float(abs(scaled - nearest))
        # relative error per Gauss sum <= gerr / |g| <= gerr; 4n factors per term
        rel = 4 * n * gerr * 1.5
        bound = float(order * q**n * rel * scale / (q - 1))
        if residual + bound < 1e-6:
            return CharSumValue(q, "complex-oracle", exact=Fraction(nearest, scale), residual=residual, error_bound=bound)
        if bits >= max_bits:
            raise PrecisionError(f"residual {residual:.3g} + bound {bound:.3g} too large at {bits} bits")
        bits *= 2


def _sign(k: int) -> int:
    # (-1) ** k is a float for negative k
    return -1 if k % 2 else 1


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            r = q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not is_prime(p):
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")


# -- p-adic evaluators ---------------------------------------------------------------


def _check_padic_pre(d: HypergeometricDatum, p: int) -> None:
    if p == 2 or not is_prime(p):
        raise InvalidPrimeError(f"{p} must be an odd prime")
    if lcm_denominator(d) % p == 0:
        raise InvalidPrimeError(f"p={p} divides the level of {d}")


def hp_padic(d: HypergeometricDatum, p: int, N: int = 6) -> CharSumValue:
    """H_p via the Gamma_p form for q = p.

    H_p = 1/(1-p) sum_k prod_i Gamma_p({a_i - k/(p-1)})/Gamma_p(a_i)
          * Gamma_p(1-{b_i})/Gamma_p(1-{b_i + k/(p-1)}) * (-p)^e(k) (-1)^(kn)
          * omega((-1)^n lambda)^k.

    No overall (-1)^t: the reflection signs from rewriting Gamma_p({b_i + k/(p-1)})
    and Gamma_p({b_i}) cancel, and the Gauss-sum definition (``hq_complex``)
    agrees with this normalization for both parities of t.

    The result is guaranteed to absolute precision N.
    """
    if not satisfies_diamond(d):
        raise ValueError(f"{d} does not satisfy the diamond condition")
    _check_padic_pre(d, p)
    n = d.n
    es = [e_function(d, p, k) for k in range(p - 1)]
    s = min(es)
    c = max(0, -s)
    K = N + c
    mod = p**K
    lam = residue_mod_p((-1) ** n * d.lam, p)
    w = teichmuller_residue(lam, p, K)

    def G(x: Fraction) -> int:
        return gamma_p_residue(x, p, K)

    base = 1
    for a in d.alpha:
        base = base * pow(G(a), -1, mod) % mod
    for b in d.beta:
        base = base * G(1 - frac_part(b)) % mod
    total = 0
    wk = 1
    for k in range(p - 1):
        kappa = Fraction(k, p - 1)
        term = base
        for a in d.alpha:
            term = term * G(frac_part(a - kappa)) % mod
        for b in d.beta:
            term = term * pow(G(1 - frac_part(b + kappa)), -1, mod) % mod
        ek = es[k]
        sign = _sign(ek + k * n)
        total = (total + sign * term * wk * p ** (ek + c)) % mod
        wk = wk * w % mod
    # total = p^c (1-p) H_p mod p^K
    value = PadicNumber(p, -c, total, N) / PadicNumber.from_rational(1 - p, p, K)
    return CharSumValue(p, "padic-gk", padic=value.reduce(N))


def hq_general(d: HypergeometricDatum, q: int, N: int = 6) -> CharSumValue:
    """H_q for q = p^e coprime to M, including q != 1 mod M.

    Each Gauss sum g(omega^-a) = -pi^{s(a)} prod_j Gamma_p({p^j a/(q-1)}) is
    extended to rational arguments digit-wise; the pi-powers of every term
    combine into (-p)^E(k) with
    E(k) = sum_j sum_i -floor({p^j a_i} - {p^j k/(q-1)}) - floor({p^j k/(q-1)} + {p^j b_i}).
    Defined-over-Q data make the result independent of how the twists pair up.
    """
    p, e = _prime_power(q)
    _check_padic_pre(d, p)
    if not (is_defined_over_Q(d.alpha) and is_defined_over_Q(d.beta)):
        raise ValueError(f"{d} is not defined over Q")
    order = q - 1
    M = lcm_denominator(d)
    D = math.lcm(M, order)
    step = D // order
    A = [int(frac_part(a) * D) for a in d.alpha]
    B = [int(frac_part(b) * D) for b in d.beta]
    c = e * max(0, -profile(d).s)
    K = N + c
    mod = p**K
    pj = [pow(p, j, D) for j in range(e)]
    gam_cache: dict[int, int] = {}

    def G(num: int) -> int:
        v = gam_cache.get(num)
        if v is None:
            v = gamma_p_residue(Fraction(num, D), p, K)
            gam_cache[num] = v
        return v

    base = 1
    for j in range(e):
        for a in A:
            base = base * G(a * pj[j] % D) % mod
        for b in B:
            base = base * G(b * pj[j] % D) % mod
    base = pow(base, -1, mod)
    lam = residue_mod_p((-1) ** d.n * d.lam, p)
    w = teichmuller_residue(lam, p, K)
    total = 0
    wk = 1
    for k in range(order):
        kk = k * step
        term = base
        E = 0
        for j in range(e):
            y = kk * pj[j] % D
            for a in A:
                x = a * pj[j] % D
                term = term * G((x - y) % D) % mod
                if x < y:
                    E += 1
            for b in B:
                x = b * pj[j] % D
                term = term * G((x + y) % D) % mod
                if x + y >= D:
                    E -= 1
        total = (total + _sign(E) * term * wk * p ** (E + c)) % mod
        wk = wk * w % mod
    value = PadicNumber(p, -c, total, N) / PadicNumber.from_rational(1 - q, p, K)
    return CharSumValue(q, "padic-gk", padic=value.reduce(N))


def hq_restricted_bottom(d: HypergeometricDatum, p: int, N: int = 4) -> PadicNumber:
    """The k-sum of :func:`hp_padic` restricted to k with e(k) = s, times p^max(0,-s)."""
    full = _hp_terms(d, p, N)
    s = min(e for _, e in full)
    c = max(0, -s)
    acc = PadicNumber.zero(p, N)
    for term, ek in full:
        if ek == s:
            acc = acc + term.mul_p_power(c)
    return acc


def _hp_terms(d: HypergeometricDatum, p: int, N: int) -> list[tuple[PadicNumber, int]]:
    """The individual summands of the q = p Gamma_p form (without 1/(1-p))."""
    n = d.n
    es = [e_function(d, p, k) for k in range(p - 1)]
    c = max(0, -min(es))
    K = N + c + 2
    lam = residue_mod_p((-1) ** n * d.lam, p)
    w = teichmuller_residue(lam, p, K)
    out = []
    for k in range(p - 1):
        kappa = Fraction(k, p - 1)
        unit = 1
        mod = p**K
        for a in d.alpha:
            unit = unit * gamma_p_residue(frac_part(a - kappa), p, K) * pow(gamma_p_residue(a, p, K), -1, mod) % mod
        for b in d.beta:
            unit = unit * gamma_p_residue(1 - frac_part(b), p, K) % mod
            unit = unit * pow(gamma_p_residue(1 - frac_part(b + kappa), p, K), -1, mod) % mod
        unit = unit * pow(w, k, mod) * _sign(es[k] + k * n) % mod
        out.append((PadicNumber(p, es[k], unit, es[k] + K), es[k]))
    return out
