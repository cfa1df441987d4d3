from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from hgc.datum import ALIASES
from hgc.errors import ConsistencyError, InvalidPrimeError, NotDegenerateError
from hgc.euler import (
    EulerFactor,
    degenerate_by_functional_equation,
    divide_linear,
    euler_factor,
    format_polynomial,
    from_power_sums,
    linear_coefficient,
    poly_mul,
    power_sums,
    reduced_euler_factor,
    remove_degenerate_factor,
    root_abs_values,
    scale_variable,
    to_power_sums,
    trace,
)

small_int_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=5)


@given(small_int_lists)
def test_newton_round_trip(roots):
    f = (1,)
    for mu in roots:
        f = poly_mul(f, (1, -mu))
    ts = to_power_sums(f, len(roots))
    assert ts == [sum(mu**s for mu in roots) for s in range(1, len(roots) + 1)]
    assert from_power_sums(ts).coefficients == f


def test_non_integral_power_sums_rejected():
    with pytest.raises(ConsistencyError):
        from_power_sums([1, 0])  # e_2 = 1/2


@given(small_int_lists, st.integers(-30, 30))
def test_divide_linear(roots, mu):
    f = (1,)
    for r in roots:
        f = poly_mul(f, (1, -r))
    g = poly_mul(f, (1, -mu))
    assert divide_linear(g, mu) == f


def test_divide_linear_remainder():
    assert divide_linear((1, 3, 2), 5) is None


def test_h6_at_five():
    f = euler_factor(ALIASES["H6"], 5)
    assert f.coefficients == (1, 6, 25)
    assert str(f) == "25*T^2 + 6*T + 1"


def test_h2_at_seven():
    f, rem = reduced_euler_factor(ALIASES["H2"], 7)
    assert f.coefficients == (1, -8, 343)
    assert rem is not None and abs(rem.eigenvalue) == 7


def test_h1_degenerate_root():
    f = euler_factor(ALIASES["H1"], 5)
    assert f.degree == 5
    rem = remove_degenerate_factor(f, 6)
    assert rem.factor.coefficients == (1, 36, 1390, 112500, 9765625)
    assert rem.eigenvalue == -25 and rem.method == "trial-division"


def test_functional_equation_agrees_with_trial_division():
    for p in (5, 7):
        a = remove_degenerate_factor(euler_factor(ALIASES["H1"], p), 6)
        b = degenerate_by_functional_equation(ALIASES["H1"], p)
        assert a.factor == b.factor and a.eigenvalue == b.eigenvalue
        assert b.method == "functional-equation"


def test_reduced_factor_is_pure():
    # weight 5 for H1: every reciprocal root has |mu| = p^(5/2)
    f, _ = reduced_euler_factor(ALIASES["H1"], 7)
    for r in root_abs_values(f):
        assert r == pytest.approx(7**2.5, rel=1e-9)


def test_not_degenerate():
    with pytest.raises(NotDegenerateError):
        remove_degenerate_factor(EulerFactor((1, 6, 25), 5), 3)
    with pytest.raises(NotDegenerateError):
        remove_degenerate_factor(EulerFactor((1, 1, 1), 5), 4)


def test_bad_prime():
    with pytest.raises(InvalidPrimeError):
        euler_factor(ALIASES["H1"], 3)


def test_scale_and_trace():
    assert scale_variable((1, -8, 343), 7) == (1, -56, 16807)
    assert trace(EulerFactor((1, -8, 343), 7)) == 8


def test_linear_coefficient_shortcut():
    assert linear_coefficient(ALIASES["H6"], 5) == 6
    assert linear_coefficient(ALIASES["H1"], 5) == 36


def test_power_sums_match_factor():
    ts = power_sums(ALIASES["H6"], 7, 2)
    assert from_power_sums(ts, 7) == euler_factor(ALIASES["H6"], 7)


def test_constant_term_enforced():
    with pytest.raises(ValueError):
        EulerFactor((2, 1), 5)


def test_format_polynomial():
    assert format_polynomial((1, -1, 0, 4)) == "4*T^3 - T + 1"
    assert format_polynomial((0,)) == "0"
