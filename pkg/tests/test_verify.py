from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hgc.datum import ALIASES, HypergeometricDatum
from hgc.errors import InvalidPrimeError, NotOrdinaryError
from hgc.padic import PadicNumber
from hgc.verify import (
    CATALOG,
    RIGID_PAIRS,
    Verdict,
    catalog_group,
    check_dwork,
    check_supercongruence,
    check_shifted_series,
    compare,
    identity,
    is_ordinary,
    report_json,
    run_catalog,
    unit_root,
    whipple_terminating,
)

F = Fraction


def D(a, b, lam=1):
    return HypergeometricDatum.make([F(x) for x in a], [F(x) for x in b], lam)


def P(x, p=7, N=6):
    return PadicNumber.from_rational(x, p, N)


def test_compare_three_verdicts():
    assert compare(P(1), 1 + 7**3, 3).verdict is Verdict.HOLDS
    assert compare(P(1), 1 + 7**2, 3).verdict is Verdict.FAILS
    low = PadicNumber.from_rational(1, 7, 2)
    assert compare(low, 1, 3).verdict is Verdict.INCONCLUSIVE
    # a difference visible below the certified precision still fails
    assert compare(low, 2, 3).verdict is Verdict.FAILS


@given(st.integers(-10**6, 10**6), st.integers(1, 5))
def test_holds_is_monotone_in_modulus(x, c):
    chk = compare(P(x, N=8), x + 7**5, 5)
    assert chk.holds
    assert chk.at_modulus(c).holds


def test_at_modulus_cannot_strengthen():
    with pytest.raises(ValueError):
        compare(P(1), 1, 3).at_modulus(4)


def test_identity_report():
    row = identity(5, 5, "x", 7).to_dict("spec-x")
    assert row == {"spec": "spec-x", "p": 7, "modulus_exp": None, "verdict": "holds", "lhs": "5", "rhs": "5", "precision": None}
    assert identity(5, 6, "x", 7).verdict is Verdict.FAILS


def test_report_json_is_sorted_and_parseable():
    rows = run_catalog(catalog_group("weight2"), [7, 11])
    doc = json.loads(report_json(rows))
    assert [(r["spec"], r["p"]) for r in doc] == sorted((r["spec"], r["p"]) for r in doc)
    assert set(doc[0]) == {"spec", "p", "modulus_exp", "verdict", "lhs", "rhs", "precision"}


def test_dwork_small():
    d = D(["1/2", "1/2"], ["1", "1"])
    assert check_dwork(d, 5, m=1, s=1, t=2).holds
    assert check_dwork(d, 7, m=2, s=1, t=1).holds


def test_dwork_argument_checks():
    with pytest.raises(ValueError):
        check_dwork(ALIASES["H6"], 5, s=2, t=1)


def test_unit_root_and_ordinarity():
    d = D(["1/2"] * 4, ["1"] * 4)
    assert unit_root(d, 7, N=3).residue() == 24
    # y^2 = x(x-1)(x+1) has CM by i: supersingular at p = 3 mod 4
    cm = D(["1/2", "1/2"], ["1", "1"], -1)
    assert is_ordinary(cm, 13) and not is_ordinary(cm, 7)
    with pytest.raises(NotOrdinaryError):
        unit_root(cm, 7)


def test_catalog_structure():
    assert len(RIGID_PAIRS) == 14
    assert len(catalog_group("rigid4f3")) == 42
    assert {s.id for s in catalog_group("sextic-a")} == {"sextic-a-identity", "sextic-a-congruence"}
    assert CATALOG["remark"].admits(13) and not CATALOG["remark"].admits(11)
    assert not CATALOG["mortenson"].admits(2)
    with pytest.raises(KeyError):
        catalog_group("nonsense")


def test_inadmissible_prime():
    with pytest.raises(InvalidPrimeError):
        check_supercongruence(CATALOG["remark"], 7)


def test_sextic_a_sign_variant_fails_at_3_mod_4():
    assert check_supercongruence(CATALOG["sextic-a-identity"], 7).holds
    assert check_supercongruence(CATALOG["sextic-a-identity-alt"], 7).verdict is Verdict.FAILS
    assert check_supercongruence(CATALOG["sextic-a-identity-alt"], 13).holds


def test_shifted_series_sign_for_odd_t():
    d = D(["1/2"] * 3 + ["1/3", "2/3"], ["1"] * 3 + ["1/6", "5/6"], -1)
    assert check_shifted_series(d, 13).holds
    assert check_shifted_series(d, 13, t_sign=True).verdict is Verdict.FAILS


def test_whipple_small():
    params = {k: F(v) for k, v in zip("acdef", ["1/2", "1/3", "2/7", "3/5", "1/9"])}
    lhs, rhs = whipple_terminating("7F6", params, 4)
    assert lhs == rhs
    lhs, rhs = whipple_terminating("6F5", {k: params[k] for k in "acd"} | {"b": F(2, 3)}, 5)
    assert lhs == rhs
    with pytest.raises(ValueError):
        whipple_terminating("8F7", params, 2)


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19, 23])
def test_quartic_f_needs_the_minus_two_twist(p):
    twisted = check_supercongruence(CATALOG["4f3-f-twisted"], p)
    literal = check_supercongruence(CATALOG["4f3-f"], p)
    assert twisted.holds
    # the untwisted statement agrees exactly when (-2/p) = 1, i.e. p = 1, 3 mod 8
    assert literal.holds is (p % 8 in (1, 3))


def test_whipple_top_parameter_must_be_shifted():
    # with plain `a` as the first 4F3 numerator the transformation is false
    from hgc.series import pochhammer as P
    from hgc.verify import hyper_sum

    a, c, d, e, f = F(1, 2), F(1, 3), F(2, 7), F(3, 5), F(1, 9)
    m = 3
    lhs, rhs = whipple_terminating("7F6", dict(zip("acdef", (a, c, d, e, f))), m)
    q = P(1 + a, m) * P(1 + a - e - f, m) / (P(1 + a - e, m) * P(1 + a - f, m))
    wrong = q * hyper_sum([a, e, f, F(-m)], [e + f - m - a, 1 + a - c, 1 + a - d], 1, m)
    assert lhs == rhs != wrong
