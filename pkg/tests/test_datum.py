from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hgc.datum import (
    ALIASES,
    HypergeometricDatum,
    dash_image,
    format_datum,
    is_defined_over_Q,
    lcm_denominator,
    parse_datum,
    satisfies_diamond,
)
from hgc.errors import InvalidPrimeError

F = Fraction


def galois_orbit(den: int) -> list[Fraction]:
    from math import gcd

    return [F(k, den) for k in range(1, den) if gcd(k, den) == 1]


def test_level_of_example_one():
    d = ALIASES["H1"]
    assert lcm_denominator(d) == 6


def test_multisets_compare_as_sorted():
    a = HypergeometricDatum.make(["2/3", "1/3"], [1, 1])
    b = HypergeometricDatum.make(["1/3", "2/3"], [1, 1])
    assert a == b and hash(a) == hash(b)


def test_sizes_must_match():
    with pytest.raises(ValueError):
        HypergeometricDatum.make(["1/2"], [1, 1])


@pytest.mark.parametrize(
    "s, expected",
    [
        (["1/5", "2/5", "3/5", "4/5"], True),
        (["1/2", "1/2", "1/3", "2/3"], True),
        (["1/3"], False),
        (["1/10", "9/10", "5/12", "7/12"], False),
        (["1/12", "5/12", "7/12", "11/12"], True),
    ],
)
def test_defined_over_Q(s, expected):
    assert is_defined_over_Q([F(x) for x in s]) is expected


def test_diamond():
    assert satisfies_diamond(ALIASES["H1"])
    assert not satisfies_diamond(HypergeometricDatum.make(["1/2", "1"], [1, 1]))
    # a_i - b_j an integer
    assert not satisfies_diamond(HypergeometricDatum.make(["1/2", "1/2"], ["1/2", 1]))


@given(st.sampled_from([3, 4, 5, 6, 8, 10, 12]), st.sampled_from([5, 7, 11, 13, 17, 19, 23]))
def test_dash_preserves_galois_orbits(den, p):
    if den % p == 0:
        return
    orbit = galois_orbit(den)
    assert sorted(dash_image(orbit, p)) == sorted(orbit)


def test_dash_rejects_bad_prime():
    with pytest.raises(InvalidPrimeError):
        dash_image([F(1, 5)], 5)


def test_parse_round_trip():
    text = "alpha=1/2, 1/2,1/3,2/3; beta=1,1,7/6,5/6 ; lambda=-1"
    d = parse_datum(text)
    assert d.lam == -1
    assert parse_datum(format_datum(d)) == d


def test_parse_alias_and_default_lambda():
    assert parse_datum("h6") == ALIASES["H6"]
    assert parse_datum("alpha=1/2,1/2;beta=1,1").lam == 1


@pytest.mark.parametrize("bad", ["alpha=1/2", "gamma=1; beta=1", "alpha=1/2;beta=1,1"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_datum(bad)


def test_aliases_match_magma_names():
    assert ALIASES["H5"].lam == -1 and ALIASES["H5"].n == 5
    assert ALIASES["H7"].beta == tuple(sorted(F(x) for x in ["1", "1", "1", "1/6", "5/6"]))
