from __future__ import annotations

from fractions import Fraction

import pytest

from hgc.datum import ALIASES, HypergeometricDatum
from hgc.errors import NotApplicableError
from hgc.padic import primes_between
from hgc.profile import (
    e_function,
    export_profile_plot,
    hat_breve,
    lemma_nu_identity,
    nu,
    profile,
    profile_at_p,
    render_svg,
)

F = Fraction


def D(a, b, lam=1):
    return HypergeometricDatum.make([F(x) for x in a], [F(x) for x in b], lam)


EX2 = D(["1/2", "1/2", "1/6", "5/6"], ["1", "1", "1/3", "2/3"])
SIXTH = D(["1/2"] * 4 + ["1/6", "5/6"], ["1"] * 4 + ["1/3", "2/3"])


def test_nu_values():
    assert nu(0, 3, 7) == 0 and nu(4, 3, 7) == 1
    with pytest.raises(ValueError):
        nu(7, 0, 7)


def test_example_one_profile():
    pr = profile(ALIASES["H1"])
    assert (pr.s, pr.w) == (-1, 6)
    assert pr.bottom == ((F(1, 6), F(1, 3)),)
    assert pr.hat_alpha == ALIASES["H1"].alpha
    assert pr.breve_beta == tuple(sorted(F(x) for x in ["1", "1", "1", "1", "7/6", "5/6"]))


def test_disconnected_bottom():
    pr = profile(EX2)
    assert (pr.s, pr.w, pr.connected) == (0, 2, False)
    assert pr.bottom == ((F(0), F(1, 6)), (F(1, 3), F(1, 2)))
    with pytest.raises(NotApplicableError):
        hat_breve(EX2)


def test_quintic_profile():
    pr = profile(ALIASES["H5"].with_lambda(1), 7)
    assert (pr.s, pr.w, pr.t_parity) == (0, 5, 1)
    assert pr.bottom == ((F(0), F(1, 2)),)


@pytest.mark.parametrize("p", [p for p in primes_between(13, 97) if p % 6 == 1])
def test_prime_profile_agrees_with_p_free(p):
    # once every breakpoint and every gap contains a grid point k/(p-1)
    for d in (ALIASES["H1"], EX2, SIXTH):
        pp = profile_at_p(d, p)
        pr = profile(d)
        assert (pp.s, pp.w, pp.connected) == (pr.s, pr.w, pr.connected)
        lo, hi = pp.bottom[0]
        assert F(lo, p - 1) >= pr.bottom[0][0] and F(hi, p - 1) <= pr.bottom[0][1]


def test_hat_breve_at_p_is_k_independent():
    for p in primes_between(5, 31):
        assert hat_breve(ALIASES["H1"], p) == hat_breve(ALIASES["H1"])


def test_e_at_zero_is_zero_for_unit_beta():
    assert e_function(ALIASES["H1"], 7, 0) == 0


def test_lemma_nu_identity_small():
    for p in (5, 7, 11):
        for k in range(p):
            assert lemma_nu_identity(k, F(1, 3), p)


def test_exports(tmp_path):
    pr = profile(ALIASES["H1"])
    svg = export_profile_plot(pr, "svg", tmp_path / "e.svg")
    csv = export_profile_plot(pr, "csv", tmp_path / "e.csv")
    assert svg.read_text().startswith("<svg")
    rows = csv.read_text().splitlines()
    assert len(rows) > 2 and "," in rows[0]
    assert "polyline" in render_svg(pr) or "path" in render_svg(pr)
