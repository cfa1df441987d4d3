"""Congruence checks with three-valued, precision-certified verdicts.

Every statement checked here is a congruence (or an exact identity)
between a scaled truncated series and a recipe built from modular form
coefficients, Legendre symbols, powers of p and Gamma_p values.  The
catalog below is data; :func:`check_supercongruence` evaluates one entry
at one prime.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .datum import HypergeometricDatum, ALIASES, frac_part, lcm_denominator
from .errors import InvalidPrimeError, NotOrdinaryError
from .euler import linear_coefficient, power_sum, reduced_euler_factor, trace, twist_exponent
from .modforms import F_8_6_1_A, eta_ap, fetch_ap, legendre
from .padic import PadicNumber, dash, gamma_p, is_prime
from .series import pochhammer, truncated_F, truncated_F_padic


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CongruenceCheck:
    description: str
    p: int
    modulus_exponent: int | None  # None for an exact identity
    lhs: PadicNumber | int | Fraction
    rhs: PadicNumber | int | Fraction
    verdict: Verdict
    guaranteed_precision: int | None

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def at_modulus(self, c: int) -> CongruenceCheck:
        """The same comparison at a smaller modulus (monotone in c)."""
        if self.modulus_exponent is None or c > self.modulus_exponent:
            raise ValueError("can only weaken a congruence")
        return compare(self.lhs, self.rhs, c, self.description, self.p)

    def to_dict(self, spec_id: str | None = None) -> dict:
        c = self.modulus_exponent
        return {
            "spec": spec_id or self.description,
            "p": self.p,
            "modulus_exp": c,
            "verdict": self.verdict.value,
            "lhs": _fmt(self.lhs, c),
            "rhs": _fmt(self.rhs, c),
            "precision": self.guaranteed_precision,
        }


def _fmt(x, c: int | None) -> str:
    if isinstance(x, PadicNumber):
        if c is not None and x.prec > c and x.val < c:
            x = x.reduce(c)
        return str(x)
    return str(x)


def compare(
    lhs: PadicNumber | Fraction | int,
    rhs: PadicNumber | Fraction | int,
    c: int,
    description: str = "",
    p: int | None = None,
) -> CongruenceCheck:
    """lhs == rhs mod p^c, refusing to decide below the certified precision."""
    if not isinstance(lhs, PadicNumber):
        if not isinstance(rhs, PadicNumber):
            raise TypeError("at least one side must be p-adic")
        lhs, rhs = rhs, lhs
        swap = True
    else:
        swap = False
    diff = lhs - rhs
    prec = diff.prec
    if not diff.is_zero and diff.val < min(c, prec):
        verdict = Verdict.FAILS  # the difference is certified nonzero mod p^c
    elif prec >= c:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.INCONCLUSIVE
    if swap:
        lhs, rhs = rhs, lhs
    return CongruenceCheck(description, p or diff.p, c, lhs, rhs, verdict, prec)


def identity(lhs: int | Fraction, rhs: int | Fraction, description: str, p: int) -> CongruenceCheck:
    v = Verdict.HOLDS if lhs == rhs else Verdict.FAILS
    return CongruenceCheck(description, p, None, lhs, rhs, v, None)


# -- series helpers --------------------------------------------------------------------


def series_padic(d: HypergeometricDatum, m: int, p: int, N: int) -> PadicNumber:
    return truncated_F_padic(d, m, p, N).value


def dash_datum(d: HypergeometricDatum, p: int) -> HypergeometricDatum:
    """(alpha', beta'; lambda^p)."""
    return HypergeometricDatum.make(
        [dash(a, p) for a in d.alpha], [dash(b, p) for b in d.beta], d.lam**p, name=None
    )


def normalize_beta(d: HypergeometricDatum) -> HypergeometricDatum:
    """Move beta into (0, 1]; H_q only sees beta modulo 1."""
    return d.with_beta([1 - frac_part(1 - b) for b in d.beta])


# -- Dwork congruences and unit roots -------------------------------------------------


def check_dwork(
    d: HypergeometricDatum,
    p: int,
    m: int = 1,
    s: int = 1,
    t: int = 1,
    strength: int = 1,
    *,
    use_dash: bool = True,
    guard: int = 3,
) -> CongruenceCheck:
    """F_{m p^s - 1} F'_{m p^(t-1) - 1} == F'_{m p^(s-1) - 1} F_{m p^t - 1} mod p^(strength s).

    F' is the series of (alpha', beta'; lambda^p); with ``use_dash=False``
    the same datum is used on both sides.
    """
    if not 1 <= s <= t:
        raise ValueError(f"need 1 <= s <= t, got s={s}, t={t}")
    if lcm_denominator(d) % p == 0:
        raise InvalidPrimeError(f"p={p} divides the level of {d}")
    c = strength * s
    d2 = dash_datum(d, p) if use_dash else d
    N = c + guard
    for _ in range(4):
        a = series_padic(d, m * p**s - 1, p, N)
        b = series_padic(d2, m * p ** (t - 1) - 1, p, N)
        a2 = series_padic(d2, m * p ** (s - 1) - 1, p, N)
        b2 = series_padic(d, m * p**t - 1, p, N)
        chk = compare(a * b, a2 * b2, c, f"dwork m={m} s={s} t={t} x{strength}", p)
        if chk.verdict is not Verdict.INCONCLUSIVE:
            return chk
        N += c + guard  # cancelled leading digits; try again with more
    return chk


def is_ordinary(d: HypergeometricDatum, p: int) -> bool:
    return series_padic(d, p - 1, p, 2).val == 0


def unit_root(d: HypergeometricDatum, p: int, N: int = 3, check_m: Iterable[int] = (1, 2)) -> PadicNumber:
    """mu mod p^N from F_{m p^s - 1} / F'_{m p^(s-1) - 1}, checked for s <= N and each m."""
    if not is_ordinary(d, p):
        raise NotOrdinaryError(f"p={p} divides F_(p-1) for {d}")
    d2 = dash_datum(d, p)
    ref: PadicNumber | None = None
    for m in check_m:
        prev: PadicNumber | None = None
        for s in range(1, N + 1):
            num = series_padic(d, m * p**s - 1, p, s + 2)
            den = series_padic(d2, m * p ** (s - 1) - 1, p, s + 2)
            r = (num / den).reduce(s)
            if prev is not None and not r.congruent(prev, s - 1):
                raise AssertionError(f"unit root unstable at m={m}, s={s}: {r} vs {prev}")
            prev = r
        assert prev is not None
        if ref is not None and not prev.congruent(ref, N):
            raise AssertionError(f"unit root depends on m: {prev} vs {ref}")
        ref = prev
    assert ref is not None
    return ref


# -- right-hand-side recipes ---------------------------------------------------------


@dataclass(frozen=True)
class RhsTerm:
    """coeff * (leg/p) * p^p_power * source(p) [* Gamma factor]."""

    coeff: int = 1
    legendre: int | None = None
    p_power: int = 0
    source: str | None = None  # "form:<label>", "eta:8.6.1.a", "trace:<datum>", "seq:A", "seq:B"
    gamma: str | None = None  # "quarter": Gamma_p(1/4)^2 / Gamma_p(1/2)


@dataclass(frozen=True)
class ConjectureSpec:
    id: str
    group: str
    description: str
    datum: HypergeometricDatum
    rhs: tuple[RhsTerm, ...]
    modulus: int | None  # None: exact identity of p^scale H_p
    kind: str = "series"  # series | identity | dwork
    p_scale: int = 0
    trunc_m: int = 1  # F_{m p - 1}
    rhs_series_m: int | None = None  # multiply rhs by F_{m-1} (footnote form)
    min_prime: int = 7
    residue: tuple[int, tuple[int, ...]] | None = None  # (modulus, allowed residues)
    status: str = "conjecture"

    def admits(self, p: int) -> bool:
        if not is_prime(p) or p < self.min_prime or lcm_denominator(self.datum) % p == 0:
            return False
        if self.residue is not None:
            mod, allowed = self.residue
            return p % mod in allowed
        return True


def _d(alpha: Iterable[str], beta: Iterable[str], lam: int | str = 1) -> HypergeometricDatum:
    return HypergeometricDatum.make([Fraction(a) for a in alpha], [Fraction(b) for b in beta], lam)


def _pair_datum(r1: Fraction, r2: Fraction) -> HypergeometricDatum:
    return HypergeometricDatum.make([r1, 1 - r1, r2, 1 - r2], [1, 1, 1, 1], 1)


RIGID_PAIRS: tuple[tuple[str, str], ...] = (
    ("1/2", "1/2"),
    ("1/2", "1/3"),
    ("1/2", "1/4"),
    ("1/2", "1/6"),
    ("1/3", "1/3"),
    ("1/3", "1/4"),
    ("1/3", "1/6"),
    ("1/4", "1/4"),
    ("1/4", "1/6"),
    ("1/6", "1/6"),
    ("1/5", "2/5"),
    ("1/8", "3/8"),
    ("1/10", "3/10"),
    # (1/10, 5/12) would not be defined over Q; the rigid
    # companion of the list is {1/12, 5/12, 7/12, 11/12}
    ("1/12", "5/12"),
)


@lru_cache(maxsize=None)
def weight4_trace(d: HypergeometricDatum, p: int) -> int:
    """a_p of the weight-4 form attached to (alpha, {1,1,1,1}; 1): the trace of the
    Euler factor once the degenerate linear factor is removed."""
    f, _ = reduced_euler_factor(d, p)
    return trace(f)


def _parse_datum_key(key: str) -> HypergeometricDatum:
    from .datum import parse_datum

    return parse_datum(key)


def _source_value(src: str, p: int) -> int:
    kind, _, arg = src.partition(":")
    if kind == "form":
        return fetch_ap(arg, p)
    if kind == "eta":
        if arg != "8.6.1.a":
            raise ValueError(f"no eta product registered for {arg}")
        return eta_ap(F_8_6_1_A, p)
    if kind == "trace":
        return weight4_trace(_parse_datum_key(arg), p)
    if kind == "seq":
        return compute_Ap(p) if arg == "A" else compute_Bp(p)
    raise ValueError(f"unknown rhs source {src!r}")


def evaluate_rhs(spec: ConjectureSpec, p: int, N: int) -> PadicNumber:
    total = PadicNumber.zero(p, N)
    for t in spec.rhs:
        x = Fraction(t.coeff) * Fraction(p) ** t.p_power
        if t.legendre is not None:
            x *= legendre(t.legendre, p)
        if t.source is not None:
            x *= _source_value(t.source, p)
        term = PadicNumber.from_rational(x, p, N + 8) if x else PadicNumber.zero(p, N + 8)
        if t.gamma == "quarter":
            term = term * gamma_p(Fraction(1, 4), p, N + 2) ** 2 / gamma_p(Fraction(1, 2), p, N + 2)
        elif t.gamma is not None:
            raise ValueError(f"unknown gamma factor {t.gamma!r}")
        total = total + term
    if spec.rhs_series_m is not None:
        total = total * series_padic(spec.datum, spec.rhs_series_m - 1, p, N + 2)
    return total.reduce(N)


def evaluate_rhs_exact(spec: ConjectureSpec, p: int) -> int:
    total = Fraction(0)
    for t in spec.rhs:
        if t.gamma is not None:
            raise ValueError("Gamma_p factors have no exact value")
        x = Fraction(t.coeff) * Fraction(p) ** t.p_power
        if t.legendre is not None:
            x *= legendre(t.legendre, p)
        if t.source is not None:
            x *= _source_value(t.source, p)
        total += x
    return total


def check_supercongruence(spec: ConjectureSpec, p: int, guard: int = 3) -> CongruenceCheck:
    if not spec.admits(p):
        raise InvalidPrimeError(f"p={p} is not admissible for {spec.id}")
    if spec.kind == "identity":
        lhs = _exact_hp(normalize_beta(spec.datum), p) * Fraction(p) ** spec.p_scale
        if lhs.denominator == 1:
            lhs = int(lhs)
        return identity(lhs, evaluate_rhs_exact(spec, p), spec.id, p)
    c = spec.modulus
    assert c is not None
    if spec.kind == "dwork":
        return check_dwork(spec.datum, p, 1, 1, 2, c, use_dash=False)
    N = c + guard
    lhs = series_padic(spec.datum, spec.trunc_m * p - 1, p, N).mul_p_power(spec.p_scale)
    rhs = evaluate_rhs(spec, p, N + spec.p_scale)
    return compare(lhs, rhs, c, spec.id, p)


def _exact_hp(d: HypergeometricDatum, p: int) -> Fraction:
    return Fraction(power_sum(d, p, 1), p ** twist_exponent(d))


# -- the catalog ------------------------------------------------------------------------


def _build_catalog() -> dict[str, ConjectureSpec]:
    specs: list[ConjectureSpec] = []
    for r1, r2 in RIGID_PAIRS:
        d = _pair_datum(Fraction(r1), Fraction(r2))
        key = f"alpha={r1},{1 - Fraction(r1)},{r2},{1 - Fraction(r2)}; beta=1,1,1,1"
        tag = f"{r1.replace('/', '_')}-{r2.replace('/', '_')}"
        src = RhsTerm(source=f"trace:{key}")
        for m in (1, 2, 3):
            specs.append(
                ConjectureSpec(
                    id=f"rigid4f3-{tag}" + ("" if m == 1 else f"-m{m}"),
                    group="rigid4f3",
                    description=f"4F3(r1,1-r1,r2,1-r2) with (r1,r2)=({r1},{r2}), F_(mp-1) == a_p F_(m-1), m={m}",
                    datum=d,
                    rhs=(src,),
                    modulus=3,
                    trunc_m=m,
                    rhs_series_m=None if m == 1 else m,
                    min_prime=7,
                    status="theorem",
                )
            )
    half6 = _d(["1/2"] * 6, ["1"] * 6)
    specs.append(
        ConjectureSpec(
            "mortenson", "mortenson", "6F5(1/2^6; 1) == a_p(8.6.1.a) mod p^5",
            half6, (RhsTerm(source="eta:8.6.1.a"),), 5, min_prime=3,
        )
    )
    h1 = ALIASES["H1"]
    sextic_a_rhs = (
        RhsTerm(legendre=2, source="form:64.6.1.f"),
        RhsTerm(legendre=-3, p_power=1, source="form:36.4.1.a"),
    )
    specs.append(
        ConjectureSpec(
            "sextic-a-identity", "sextic-a", "p H_p(H1) = (2/p)a(64.6.1.f) + (-3/p)p a(36.4.1.a) + (3/p)p^2",
            h1, sextic_a_rhs + (RhsTerm(legendre=3, p_power=2),), None, kind="identity", p_scale=1,
        )
    )
    specs.append(
        ConjectureSpec(
            "sextic-a-identity-alt", "sextic-a-variant",
            "variant with (-3/p)p^2 in place of (3/p)p^2 (expected to fail for p = 3 mod 4)",
            h1, sextic_a_rhs + (RhsTerm(legendre=-3, p_power=2),), None, kind="identity", p_scale=1,
        )
    )
    specs.append(
        ConjectureSpec(
            "sextic-a-congruence", "sextic-a", "p 6F5(1/2^4,1/3,2/3; 1^4,7/6,5/6)_{p-1} == (2/p)a(64.6.1.f) mod p^5",
            _d(["1/2"] * 4 + ["1/3", "2/3"], ["1"] * 4 + ["7/6", "5/6"]),
            (RhsTerm(legendre=2, source="form:64.6.1.f"),), 5, p_scale=1,
        )
    )
    specs.append(
        ConjectureSpec(
            "sextic-b", "sextic-b", "p^2 6F5(1/2,1/2,1/3,2/3,1/3,2/3; 1,7/6,5/6,7/6,5/6) == (-1/p)a(48.6.1.c) mod p^4",
            _d(["1/2", "1/2", "1/3", "2/3", "1/3", "2/3"], ["1", "1", "7/6", "5/6", "7/6", "5/6"]),
            (RhsTerm(legendre=-1, source="form:48.6.1.c"),), 4, p_scale=2,
        )
    )
    d32 = _d(["1/2"] * 4 + ["1/6", "5/6"], ["1"] * 4 + ["4/3", "2/3"])
    specs.append(
        ConjectureSpec(
            "sextic-c-identity", "sextic-c", "H_p = (2/p)a(64.4.1.d) + (-3/p)a(72.4.1.b) + (3/p)p",
            d32,
            (
                RhsTerm(legendre=2, source="form:64.4.1.d"),
                RhsTerm(legendre=-3, source="form:72.4.1.b"),
                RhsTerm(legendre=3, p_power=1),
            ),
            None, kind="identity", min_prime=5,
        )
    )
    specs.append(
        ConjectureSpec(
            "sextic-c-congruence", "sextic-c", "6F5(1/2^4,1/6,5/6; 1^4,4/3,2/3) == (2/p)a(64.4.1.d) mod p^3",
            d32, (RhsTerm(legendre=2, source="form:64.4.1.d"),), 3, min_prime=5,
        )
    )
    specs.append(
        ConjectureSpec(
            "sextic-c-dwork", "sextic-c", "F_{p^s-1} F_{p^(t-1)-1} == F_{p^t-1} F_{p^(s-1)-1} mod p^(3s), s=1, t=2",
            d32, (), 3, kind="dwork", min_prime=5,
        )
    )
    f43 = [
        ("a", ["1/2", "1/2", "1/3", "2/3"], ["1", "1", "5/4", "3/4"], 3, "48.4.1.c"),
        ("b", ["1/2", "1/2", "1/3", "2/3"], ["1", "1", "7/6", "5/6"], -1, "48.4.1.c"),
        ("c", ["1/2", "1/2", "1/4", "3/4"], ["1", "1", "7/6", "5/6"], None, "48.4.1.c"),
        ("d", ["1/2"] * 4, ["1", "1", "4/3", "2/3"], None, "24.4.1.a"),
        ("e", ["1/2"] * 4, ["1", "1", "7/6", "5/6"], None, "12.4.1.a"),
        ("f", ["1/2"] * 4, ["1", "1", "5/4", "3/4"], None, "64.4.1.b"),
    ]
    for tag, a, b, leg, label in f43:
        specs.append(
            ConjectureSpec(
                f"4f3-{tag}", "4f3", f"p 4F3({','.join(a)}; {','.join(b)}) == {'' if leg is None else f'({leg}/p)'}a({label}) mod p^3",
                _d(a, b), (RhsTerm(legendre=leg, source=f"form:{label}"),), 3, p_scale=1,
            )
        )
    specs.append(
        ConjectureSpec(
            "4f3-f-twisted", "4f3-variant",
            "p 4F3(1/2^4; 1,1,5/4,3/4) == (-2/p)a(64.4.1.b) mod p^3 (the untwisted form fails at p = 5, 7 mod 8)",
            _d(["1/2"] * 4, ["1", "1", "5/4", "3/4"]),
            (RhsTerm(legendre=-2, source="form:64.4.1.b"),), 3, p_scale=1,
        )
    )
    for tag, a, leg in (("a", ["1/2", "1/2", "1/6", "5/6"], None), ("b", ["1/2", "1/2", "1/4", "3/4"], -1)):
        specs.append(
            ConjectureSpec(
                f"weight2-{tag}", "weight2", f"4F3({','.join(a)}; 1,1,4/3,2/3) == {'' if leg is None else f'({leg}/p)'}a(24.2.1.a) mod p",
                _d(a, ["1", "1", "4/3", "2/3"]), (RhsTerm(legendre=leg, source="form:24.2.1.a"),), 1,
                status="theorem",
            )
        )
    specs.append(
        ConjectureSpec(
            "sequence-A", "sequences", "5F4(1/2^5; -1) == -A_p mod p^2",
            ALIASES["H5"], (RhsTerm(coeff=-1, source="seq:A"),), 2,
        )
    )
    specs.append(
        ConjectureSpec(
            "sequence-B", "sequences", "p 5F4(1/2^3,1/3,2/3; 1^3,7/6,5/6; -1) == -B_p mod p^2",
            _d(["1/2"] * 3 + ["1/3", "2/3"], ["1"] * 3 + ["7/6", "5/6"], -1),
            (RhsTerm(coeff=-1, source="seq:B"),), 2, p_scale=1,
        )
    )
    specs.append(
        ConjectureSpec(
            "remark", "remark", "4F3(1/2^4; -1) == (2/p) Gamma_p(1/4)^2/Gamma_p(1/2) a(32.3.31.a) mod p^2",
            _d(["1/2"] * 4, ["1"] * 4, -1),
            (RhsTerm(legendre=2, source="form:32.3.31.a", gamma="quarter"),), 2,
            min_prime=5, residue=(4, (1,)),
        )
    )
    return {s.id: s for s in specs}


CATALOG: dict[str, ConjectureSpec] = _build_catalog()


def catalog_group(name: str) -> list[ConjectureSpec]:
    if name == "all":
        return list(CATALOG.values())
    out = [s for s in CATALOG.values() if s.group == name or s.id == name]
    if not out:
        groups = sorted({s.group for s in CATALOG.values()})
        raise KeyError(f"unknown catalog {name!r}; groups: {', '.join(groups)}")
    return out


# -- individual relations ---------------------------------------------------------------


def compute_Ap(p: int) -> int:
    return (
        linear_coefficient(ALIASES["H5"], p)
        - p * linear_coefficient(ALIASES["H6"], p)
        - legendre(-3, p) * p * p
    )


def compute_Bp(p: int) -> int:
    return (
        linear_coefficient(ALIASES["H7"], p)
        - p * linear_coefficient(ALIASES["H8"], p)
        - legendre(3, p) * p * p
    )


def check_minus2p_relation(p: int, guard: int = 3) -> list[CongruenceCheck]:
    """-2p F(..;1/6,5/6) == p F(..;7/6,5/6) mod p, and the 7F6 integrality behind it."""
    if p < 7:
        raise InvalidPrimeError("the relation is stated for p >= 7")
    a = ["1/2"] * 4 + ["1/3", "2/3"]
    lhs = series_padic(_d(a, ["1"] * 4 + ["1/6", "5/6"]), p - 1, p, 1 + guard).mul_p_power(1) * -2
    rhs = series_padic(_d(a, ["1"] * 4 + ["7/6", "5/6"]), p - 1, p, 1 + guard).mul_p_power(1)
    out = [compare(lhs, rhs, 1, "-2p relation", p)]
    # the 7F6 as displayed and with e = (1-p)/2 substituted
    top = ["1/2", "5/4", "1/2", "1/2", "1/2", "1/3", "2/3"]
    bottom = ["1/4", "1", "1", "1", "7/6", "5/6", "1"]
    for label, t in (("7F6 displayed", top), ("7F6 e=(1-p)/2", top[:4] + [str(Fraction(1 - p, 2))] + top[5:])):
        val = series_padic(_d(t, bottom), p - 1, p, 1 + guard)
        ok = val.val >= 0
        out.append(
            CongruenceCheck(
                f"{label} in Z_p", p, 0, val, 0, Verdict.HOLDS if ok else Verdict.FAILS, val.prec
            )
        )
    return out


def check_remark_gamma(p: int) -> CongruenceCheck:
    if p % 4 != 1:
        raise InvalidPrimeError(f"p={p} is not 1 mod 4")
    return check_supercongruence(CATALOG["remark"], p)


# -- terminating Whipple identities ----------------------------------------------------


def hyper_sum(top: Iterable[Fraction], bottom: Iterable[Fraction], z: Fraction | int, m: int) -> Fraction:
    """Classical pFq truncated at z^m (the k! is implicit)."""
    top, bottom = list(top), list(bottom)
    d = HypergeometricDatum(tuple(top), tuple(bottom) + (Fraction(1),), Fraction(z))
    return truncated_F(d, m)


def whipple_terminating(kind: str, params: dict[str, Fraction], m: int) -> tuple[Fraction, Fraction]:
    """Both sides of a terminating Whipple evaluation, exactly.

    kind "7F6": the very-well-poised 7F6(a,1+a/2,c,d,e,f,-m; ...; 1) against
    (1+a)_m (1+a-e-f)_m / ((1+a-e)_m (1+a-f)_m) 4F3(1+a-c-d, e, f, -m; e+f-m-a, 1+a-c, 1+a-d; 1).
    kind "6F5": 6F5(a,a/2+1,b,c,d,-m; ...; -1) against
    (a+1)_m / (a-d+1)_m 3F2(a-b-c+1, d, -m; a-b+1, a-c+1; 1).
    """
    P = pochhammer
    g = Fraction(-m)
    if kind == "7F6":
        a, c, d, e, f = (params[k] for k in "acdef")
        lhs = hyper_sum([a, 1 + a / 2, c, d, e, f, g], [a / 2, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a - f, 1 + a - g], 1, m)
        q = P(1 + a, m) * P(1 + a - e - f, m) / (P(1 + a - e, m) * P(1 + a - f, m))
        rhs = q * hyper_sum([1 + a - c - d, e, f, g], [e + f + g - a, 1 + a - c, 1 + a - d], 1, m)
    elif kind == "6F5":
        a, b, c, d = (params[k] for k in "abcd")
        lhs = hyper_sum([a, a / 2 + 1, b, c, d, g], [a / 2, a - b + 1, a - c + 1, a - d + 1, a - g + 1], -1, m)
        q = P(a + 1, m) / P(a - d + 1, m)
        rhs = q * hyper_sum([a - b - c + 1, d, g], [a - b + 1, a - c + 1], 1, m)
    else:
        raise ValueError(f"unknown Whipple kind {kind!r}")
    return lhs, rhs


# -- reports ---------------------------------------------------------------------------


def run_catalog(specs: Iterable[ConjectureSpec], primes: Iterable[int], jobs: int = 1) -> list[dict]:
    work = [(s.id, p) for s in specs for p in primes if s.admits(p)]
    if jobs > 1 and len(work) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_run_one, work))
    else:
        rows = [_run_one(w) for w in work]
    return sorted(rows, key=lambda r: (r["spec"], r["p"]))


def _run_one(item: tuple[str, int]) -> dict:
    sid, p = item
    return check_supercongruence(CATALOG[sid], p).to_dict(sid)


def report_json(rows: list[dict]) -> str:
    return json.dumps(rows, indent=1, sort_keys=True)


# -- character sum against truncated series -----------------------------------------------


def check_shifted_series(d: HypergeometricDatum, p: int, guard: int = 3, *, t_sign: bool = False) -> CongruenceCheck:
    """p^(-s) H_p(alpha, beta; lambda) == p^(-s) F(alpha-hat, beta-breve; lambda)_{p-1} mod p.

    Needs s < 0 and a connected bottom interval (the hat/breve shift is
    read off at p).  With ``t_sign`` the left side carries an extra (-1)^t;
    that form only agrees when t is even, because H_p itself has no (-1)^t
    prefactor (see :func:`hgc.charsum.hp_padic`).
    """
    from .charsum import hp_padic
    from .profile import hat_breve, profile_at_p

    pp = profile_at_p(d, p)
    if pp.s >= 0:
        raise ValueError(f"s={pp.s} is not negative for {d}")
    hat, breve = hat_breve(d, p)
    c = -pp.s
    h = hp_padic(d, p, 1 + guard).padic
    lhs = h.mul_p_power(c)
    if t_sign and pp.t % 2:
        lhs = lhs * -1
    shifted = HypergeometricDatum(hat, breve, d.lam)
    rhs = series_padic(shifted, p - 1, p, 1 + guard + c).mul_p_power(c)
    return compare(lhs, rhs, 1, "shifted-series" + ("-t-sign" if t_sign else ""), p)
