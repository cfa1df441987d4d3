"""Local Euler factors P_p(T) built from the power sums p^(s c) H_{p^s}.

Convention (fixed against known outputs): P_p(T) = prod (1 - mu_i T) with
sum_i mu_i^s = p^(s c) H_{p^s}, c = max(0, -s(alpha, beta)).  The twist by
p^(s c) makes the mu_i algebraic integers; the sign matches known
factors for data of both parities of n.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import mpmath

from .charsum import hq_general
from .datum import HypergeometricDatum, lcm_denominator
from .errors import ConsistencyError, InvalidPrimeError, NotDegenerateError
from .padic import is_prime
from .profile import profile

# Above this q the full factor is not expanded; the degenerate root is then
# located from low power sums and the functional equation instead.
FULL_EXPANSION_LIMIT = 200_000


@dataclass(frozen=True)
class EulerFactor:
    coefficients: tuple[int, ...]  # constant term first
    p: int

    def __post_init__(self) -> None:
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError(f"Euler factor must have constant term 1, got {self.coefficients[:1]}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def to_json(self) -> str:
        return json.dumps(list(self.coefficients))

    def __str__(self) -> str:
        return format_polynomial(self.coefficients)


@dataclass(frozen=True)
class DegenerateRemoval:
    factor: EulerFactor
    eigenvalue: int  # the removed mu, sign included
    method: str  # "trial-division" or "functional-equation"


# -- parameters ------------------------------------------------------------


def twist_exponent(d: HypergeometricDatum) -> int:
    return max(0, -profile(d).s)


def motive_weight(d: HypergeometricDatum) -> int:
    return profile(d).w - 1


def default_degree(d: HypergeometricDatum) -> int:
    return d.n - 1 if d.lam == 1 else d.n


def power_sum(d: HypergeometricDatum, p: int, s: int) -> int:
    """p^(s c) H_{p^s} as an exact integer."""
    c = twist_exponent(d)
    deg = d.n
    # |mu| <= p^(weight/2); two extra digits of slack for the symmetric lift
    bound = s * motive_weight(d) / 2 + math.log(2 * deg + 1, p)
    N = max(1, math.ceil(bound) + 2 - s * c)
    h = hq_general(d, p**s, N).padic
    return h.lift_integer(s * c)


def power_sums(d: HypergeometricDatum, p: int, count: int) -> list[int]:
    return [power_sum(d, p, s) for s in range(1, count + 1)]


# -- Newton's identities -----------------------------------------------------


def from_power_sums(ts: list[int] | list[Fraction], p: int = 0) -> EulerFactor:
    """prod (1 - mu T) from sum mu^s, s = 1..len(ts).  Coefficients must be integers."""
    e = [Fraction(1)]
    for k in range(1, len(ts) + 1):
        acc = sum(((-1) ** (i - 1)) * e[k - i] * ts[i - 1] for i in range(1, k + 1))
        e.append(Fraction(acc) / k)
    coeffs = []
    for k, ek in enumerate(e):
        ck = ek if k % 2 == 0 else -ek
        if ck.denominator != 1:
            raise ConsistencyError(f"coefficient of T^{k} is not an integer: {ck}")
        coeffs.append(int(ck))
    return EulerFactor(tuple(coeffs), p)


def to_power_sums(f: EulerFactor | tuple[int, ...], count: int) -> list[int]:
    """sum mu^s for s = 1..count (Newton's identities the other way)."""
    coeffs = f.coefficients if isinstance(f, EulerFactor) else tuple(f)
    deg = len(coeffs) - 1
    e = [coeffs[k] * (-1) ** k for k in range(deg + 1)]
    out: list[int] = []
    for k in range(1, count + 1):
        acc = sum((-1) ** (i - 1) * (e[i] if i <= deg else 0) * out[k - i - 1] for i in range(1, k))
        ek = e[k] if k <= deg else 0
        acc += (-1) ** (k - 1) * k * ek
        out.append(acc)
    return out


def euler_factor(d: HypergeometricDatum, p: int, degree: int | None = None) -> EulerFactor:
    """The full local factor (no degenerate factor removed)."""
    if not is_prime(p) or p == 2:
        raise InvalidPrimeError(f"{p} is not an odd prime")
    if lcm_denominator(d) % p == 0:
        raise InvalidPrimeError(f"p={p} divides the level of {d}")
    degree = default_degree(d) if degree is None else degree
    if degree > d.n:
        raise ValueError(f"degree {degree} exceeds n={d.n}")
    f = from_power_sums(power_sums(d, p, degree), p)
    return f


# -- polynomial helpers -------------------------------------------------------


def trace(f: EulerFactor) -> int:
    """Negated linear coefficient (sum of the mu_i)."""
    return -f.coefficient(1)


def scale_variable(f: EulerFactor | tuple[int, ...], c: int) -> tuple[int, ...]:
    """Coefficients of f(cT)."""
    coeffs = f.coefficients if isinstance(f, EulerFactor) else tuple(f)
    if c == 0:
        return (coeffs[0],)
    return tuple(a * c**k for k, a in enumerate(coeffs))


def poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def divide_linear(coeffs: tuple[int, ...], mu: int) -> tuple[int, ...] | None:
    """Exact quotient of f by (1 - mu T), or None if it does not divide."""
    q: list[int] = []
    carry = 0
    # f = (1 - mu T) g  =>  g_k = f_k + mu g_{k-1}
    for k in range(len(coeffs) - 1):
        carry = coeffs[k] + mu * carry
        q.append(carry)
    if coeffs[-1] + mu * carry != 0:
        return None
    return tuple(q)


def format_polynomial(coeffs: tuple[int, ...], var: str = "T") -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        a = coeffs[k]
        if a == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(a)
        body = str(mag) if (mag != 1 or k == 0) else ""
        body = f"{body}*{mono}" if body and mono else body or mono
        parts.append(("-" if a < 0 else "+", body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def root_abs_values(f: EulerFactor | tuple[int, ...], dps: int = 40) -> list[float]:
    """|mu_i| = 1/|roots of f|, sorted."""
    coeffs = f.coefficients if isinstance(f, EulerFactor) else tuple(f)
    if len(coeffs) <= 1:
        return []
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(list(reversed(coeffs)), maxsteps=200, extraprec=4 * dps)
        return sorted(float(1 / abs(r)) for r in roots)


# -- degenerate factor ---------------------------------------------------------


def remove_degenerate_factor(f: EulerFactor, n: int) -> DegenerateRemoval:
    """Divide out (1 -+ p^((n-2)/2) T), trying both signs by exact division."""
    if n % 2:
        raise NotDegenerateError(f"n={n} is odd; no degenerate factor at lambda=1")
    base = f.p ** ((n - 2) // 2)
    hits = [(mu, q) for mu in (base, -base) if (q := divide_linear(f.coefficients, mu)) is not None]
    if not hits:
        raise NotDegenerateError(f"{f} has no factor 1 -+ {base} T")
    if len(hits) > 1:
        raise ConsistencyError(f"both 1 - {base} T and 1 + {base} T divide {f}")
    mu, q = hits[0]
    return DegenerateRemoval(EulerFactor(q, f.p), mu, "trial-division")


def _palindromic(low: list[int], degree: int, p: int, weight: int, eps: int) -> tuple[int, ...]:
    """Complete 1 + a_1 T + ... from its lower half using
    a_{degree-k} = eps p^(weight (degree/2 - k)) a_k."""
    coeffs = [0] * (degree + 1)
    for k, a in enumerate(low):
        coeffs[k] = a
    for k in range(degree // 2 + 1):
        mirror = degree - k
        val = eps * p ** (weight * (degree - 2 * k) // 2) * coeffs[k]
        if mirror == k:
            if val != coeffs[k]:
                return ()
        else:
            coeffs[mirror] = val
    return tuple(coeffs)


def _pure_candidates(ts: list[int], p: int, n: int, weight: int) -> list[tuple[int, int, tuple[int, ...]]]:
    base = p ** ((n - 2) // 2)
    qdeg = n - 2
    out = []
    for mu, eps in product((base, -base), (1, -1)):
        us = [t - mu ** (s + 1) for s, t in enumerate(ts)]
        half = qdeg // 2
        try:
            low = from_power_sums(us[:half], p).coefficients
        except ConsistencyError:
            continue
        q = _palindromic(list(low), qdeg, p, weight, eps)
        if not q:
            continue
        if to_power_sums(q, len(us)) != us:
            continue
        out.append((mu, eps, q))
    return out


def degenerate_by_functional_equation(d: HypergeometricDatum, p: int, max_sums: int | None = None) -> DegenerateRemoval:
    """Locate the degenerate root without expanding the whole factor.

    The reduced factor Q has pure weight w and satisfies
    Q(T) = eps p^(w deg/2) T^deg Q(1/(p^w T)); its lower half follows from
    the first deg/2 power sums once the sign of the removed root is guessed.
    Power sums are added until exactly one (sign, eps) pair survives.
    """
    n = d.n
    if d.lam != 1 or n % 2:
        raise NotDegenerateError(f"{d} is not a lambda=1, even-n datum")
    weight = motive_weight(d)
    limit = n - 1 if max_sums is None else max_sums
    ts = power_sums(d, p, (n - 2) // 2 + 1)
    while True:
        cands = _pure_candidates(ts, p, n, weight)
        if len(cands) == 1:
            mu, _, q = cands[0]
            return DegenerateRemoval(EulerFactor(q, p), mu, "functional-equation")
        if not cands:
            raise ConsistencyError(f"no consistent degenerate root for {d} at p={p}")
        if len(ts) >= limit:
            raise ConsistencyError(f"degenerate root of {d} at p={p} ambiguous after {len(ts)} power sums")
        ts.append(power_sum(d, p, len(ts) + 1))


def reduced_euler_factor(d: HypergeometricDatum, p: int) -> tuple[EulerFactor, DegenerateRemoval | None]:
    """The factor with the singular linear factor removed when lambda = 1 and n is even."""
    if d.lam != 1 or d.n % 2:
        return euler_factor(d, p), None
    if p ** default_degree(d) <= FULL_EXPANSION_LIMIT:
        rem = remove_degenerate_factor(euler_factor(d, p), d.n)
    else:
        rem = degenerate_by_functional_equation(d, p)
    return rem.factor, rem


def linear_coefficient(d: HypergeometricDatum, p: int) -> int:
    """Coefficient of T in the reduced factor, computing only what is needed."""
    if d.lam != 1 or d.n % 2:
        return -power_sum(d, p, 1)
    f, _ = reduced_euler_factor(d, p)
    return f.coefficient(1)
