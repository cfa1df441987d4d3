from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from hgc.errors import PrecisionError
from hgc.padic import (
    PadicNumber,
    a0,
    dash,
    first_digit,
    gamma_p_integer,
    gamma_p_residue,
    is_prime,
    primes_between,
    teichmuller,
    teichmuller_residue,
    valuation,
)

F = Fraction
small_primes = st.sampled_from([3, 5, 7, 11, 13])


def brute_gamma(n: int, p: int) -> int:
    """(-1)^n prod_{0<j<n, p∤j} j, exact."""
    out = 1
    for j in range(1, n):
        if j % p:
            out *= j
    return (-1) ** n * out


@given(small_primes, st.integers(min_value=0, max_value=400), st.integers(min_value=1, max_value=6))
def test_gamma_matches_factorial_definition(p, n, N):
    assert gamma_p_integer(n, p, N) == brute_gamma(n, p) % p**N


@given(small_primes, st.integers(min_value=1, max_value=3000))
def test_gamma_functional_equation(p, n):
    N = 8
    m = p**N
    g, g1 = gamma_p_integer(n, p, N), gamma_p_integer(n + 1, p, N)
    if n % p:
        assert (g1 + n * g) % m == 0
    else:
        assert (g1 + g) % m == 0


@pytest.mark.parametrize("p", [5, 7, 31])
def test_gamma_continuity(p):
    # n == n' mod p^k  =>  Gamma_p(n) == Gamma_p(n') mod p^k
    for n in range(1, 40):
        assert gamma_p_integer(n, p, 3) == gamma_p_integer(n + p**3, p, 3)


def test_gamma_small_values():
    assert gamma_p_integer(0, 7, 4) == 1
    assert gamma_p_integer(1, 7, 4) == 7**4 - 1
    assert gamma_p_residue(F(1, 2), 5, 1) ** 2 % 5 == 4  # Gamma_p(1/2)^2 = -(-1/p)...


def test_gamma_half_square():
    # Gamma_p(1/2)^2 = (-1)^{a_0(1/2)+1} by reflection
    for p in primes_between(3, 61):
        g = gamma_p_residue(F(1, 2), p, 5)
        assert g * g % p**5 == (-1) ** (a0(F(1, 2), p) + 1) % p**5 or g * g % p**5 == (-1) ** a0(F(1, 2), p) % p**5


@given(small_primes, st.integers(1, 50), st.integers(1, 50))
def test_arithmetic_matches_fractions(p, a, b):
    x, y = F(a, b), F(b, a + 1)
    assume(x.denominator % p and y.denominator % p)
    X, Y = PadicNumber.from_rational(x, p, 10), PadicNumber.from_rational(y, p, 10)
    assert (X + Y).congruent(x + y, 9)
    assert (X * Y).congruent(x * y, 9)
    assert (X - Y).to_fraction() == (x - y) or (X - Y).congruent(x - y, 9)


def test_precision_tracking():
    x = PadicNumber.from_rational(F(1, 3), 5, 6)
    y = PadicNumber.from_rational(F(5), 5, 3)
    s = x + y
    assert s.prec == 3
    assert (x * y).prec == min(6 + 1, 3 + 0)
    with pytest.raises(PrecisionError):
        s.congruent(0, 4)


def test_division_by_p():
    x = PadicNumber.from_rational(1, 7, 5) / 7
    assert x.val == -1 and x.to_fraction() == F(1, 7)


def test_zero_has_precision():
    z = PadicNumber.zero(5, 4)
    assert z.is_zero and z.val == 4


def test_lift_integer_symmetric():
    x = PadicNumber.from_rational(-3, 5, 4)
    assert x.lift_integer() == -3


def test_first_digit_and_dash():
    p = 7
    assert first_digit(F(-1, 2), p) == (p - 1) // 2
    assert dash(F(7, 6), 7) == F(1, 6)  # p = 1 mod 3
    assert dash(F(7, 6), 11) == F(5, 6)  # p = 2 mod 3
    assert a0(F(7), 7) == 7


@given(small_primes, st.integers(1, 100), st.integers(1, 100))
def test_dash_identity(p, a, b):
    r = F(a, b)
    assume(r.denominator % p)
    assert dash(r, p) * p - r == first_digit(-r, p)


@given(small_primes, st.integers(1, 200))
def test_teichmuller(p, x):
    assume(x % p)
    N = 6
    t = teichmuller_residue(x, p, N)
    assert t % p == x % p
    assert pow(t, p - 1, p**N) == 1
    assert teichmuller(F(x), p, N).residue() == t


def test_primes():
    assert primes_between(7, 31) == [7, 11, 13, 17, 19, 23, 29, 31]
    assert not is_prime(1) and is_prime(101)
    assert valuation(250, 5) == 3
