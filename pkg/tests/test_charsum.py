from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest

from hgc.charsum import (
    finite_field,
    gauss_sums_complex,
    hp_padic,
    hq_complex,
    hq_general,
    hq_restricted_bottom,
)
from hgc.datum import ALIASES, HypergeometricDatum
from hgc.errors import InvalidPrimeError

F = Fraction


def D(a, b, lam=1):
    return HypergeometricDatum.make([F(x) for x in a], [F(x) for x in b], lam)


@pytest.mark.parametrize("p, e", [(3, 2), (5, 2), (7, 1), (2, 3)])
def test_finite_field_is_cyclic(p, e):
    tbl = finite_field(p, e)
    assert tbl.q == p**e
    assert len(set(tbl.exp[: tbl.q - 1])) == tbl.q - 1


@pytest.mark.parametrize("p, e", [(7, 1), (3, 2)])
def test_gauss_sum_classical_identities(p, e):
    tbl = finite_field(p, e)
    q = tbl.q
    with mpmath.workprec(160):
        sums, err = gauss_sums_complex(tbl, 128)
        tol = 1e-30
        assert abs(sums[0] + 1) < tol  # trivial character gives -1
        for j in range(1, q - 1):
            assert abs(abs(sums[j]) ** 2 - q) < tol
            # g(w^j) g(w^-j) = w^j(-1) q
            sign = -1 if j * ((q - 1) // 2) % (q - 1) else 1
            assert abs(sums[j] * sums[-j % (q - 1)] - sign * q) < tol


def test_hp_of_h6_at_five():
    # trace of 25T^2 + 6T + 1 is -6
    h = hq_general(ALIASES["H6"], 5, 6).padic
    assert h.congruent(-6, 6)


@pytest.mark.parametrize("p", [7, 13])
def test_three_evaluators_agree(p):
    d = D(["1/2", "1/2", "1/3", "2/3"], ["1", "1", "1", "1"])
    exact = hq_complex(d, p).exact
    assert hp_padic(d, p, 6).padic.congruent(exact, 6)
    assert hq_general(d, p, 6).padic.congruent(exact, 6)


def test_negative_lambda():
    d = D(["1/2", "1/2"], ["1", "1"], -1)
    for p in (5, 7, 13):
        assert hp_padic(d, p, 5).padic.congruent(hq_complex(d, p).exact, 5)


def test_q_square_matches_complex():
    d = D(["1/2", "1/2"], ["1", "1"])
    v = hq_complex(d, 9)
    assert hq_general(d, 9, 6).padic.congruent(v.exact, 6)


def test_q_not_one_mod_M():
    d = ALIASES["H1"]  # M = 6, q = 5
    v = hq_general(d, 5, 6)
    assert v.method == "padic-gk"
    with pytest.raises(ValueError):
        hq_complex(d, 5)


def test_twisted_value_has_bounded_denominator():
    # p^max(0,-s) H_p is integral
    for p in (5, 7, 11):
        h = hq_general(ALIASES["H1"], p, 6).padic
        assert h.val >= -1


@pytest.mark.parametrize("p", [7, 13, 19])
def test_restricted_sum_gives_leading_digit(p):
    # only the k with e(k) = s survive mod p; 1/(1-p) == 1 mod p
    d = ALIASES["H1"]
    full = hp_padic(d, p, 3).padic.mul_p_power(1)
    assert full.congruent(hq_restricted_bottom(d, p, 3), 1)


@pytest.mark.parametrize(
    "a, b, lam",
    [(["1/2"] * 3, ["1"] * 3, -1), (["1/2"] * 5, ["1"] * 5, -1), (["1/2", "1/3", "2/3"], ["1"] * 3, 1)],
)
def test_odd_t_normalization(a, b, lam):
    # no (-1)^t prefactor: the Gamma_p form agrees with the Gauss sums for odd t too
    d = D(a, b, lam)
    for p in (7, 13):
        assert hp_padic(d, p, 5).padic.congruent(hq_complex(d, p).exact, 5)


def test_bad_primes():
    with pytest.raises(InvalidPrimeError):
        hp_padic(ALIASES["H1"], 3, 4)
    with pytest.raises(InvalidPrimeError):
        hq_general(ALIASES["H1"], 2, 4)
