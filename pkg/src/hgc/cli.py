"""Command-line front end.

Exit codes: 0 success / everything holds, 1 a certified failure, 2 some
verdict inconclusive, 3 usage or fixture error.  Machine output goes to
stdout (or --out), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .datum import format_datum, parse_datum
from .errors import HGCError, MissingFixtureError, TransportError
from .padic import is_prime, primes_between

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def parse_primes(text: str) -> list[int]:
    """``7..31``, ``7,11,13`` or a single prime; only primes are kept."""
    out: set[int] = set()
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, hi = chunk.split("..")
            out.update(primes_between(int(lo), int(hi)))
        elif chunk:
            n = int(chunk)
            if not is_prime(n):
                raise ValueError(f"{n} is not prime")
            out.add(n)
    return sorted(out)


def _emit(payload, args) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=1, sort_keys=True)
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def _frac(x: Fraction) -> str:
    return str(x)


# -- subcommands ------------------------------------------------------------------


def cmd_profile(args) -> int:
    from .profile import export_profile_plot, profile, profile_at_p

    d = parse_datum(args.datum)
    pr = profile(d, args.p)
    doc = {
        "datum": format_datum(d),
        "s": pr.s,
        "w": pr.w,
        "connected": pr.connected,
        "bottom": [[_frac(a), _frac(b)] for a, b in pr.bottom],
        "breakpoints": [_frac(x) for x in pr.breakpoints],
        "hat_alpha": None if pr.hat_alpha is None else [_frac(x) for x in pr.hat_alpha],
        "breve_beta": None if pr.breve_beta is None else [_frac(x) for x in pr.breve_beta],
    }
    if args.p is not None:
        pp = profile_at_p(d, args.p)
        doc["p"] = args.p
        doc["e"] = list(pp.e)
        doc["t"] = pp.t
    if args.svg:
        export_profile_plot(pr, "svg", args.svg)
    if args.csv:
        export_profile_plot(pr, "csv", args.csv)
    _emit(doc, args)
    return EXIT_OK


def cmd_truncate(args) -> int:
    from .series import truncated_F, truncated_F_padic

    d = parse_datum(args.datum)
    if args.p is None:
        doc = {"datum": format_datum(d), "m": args.m, "value": _frac(truncated_F(d, args.m))}
    else:
        v = truncated_F_padic(d, args.m, args.p, args.N)
        doc = {
            "datum": format_datum(d),
            "m": args.m,
            "p": args.p,
            "precision": v.value.prec,
            "value": _frac(v.value.to_fraction()),
            "min_term_valuation": v.min_term_valuation,
        }
    _emit(doc, args)
    return EXIT_OK


def cmd_hp(args) -> int:
    from .charsum import hp_padic, hq_complex, hq_general

    d = parse_datum(args.datum)
    q = args.q or args.p
    if args.method == "complex":
        v = hq_complex(d, q)
        value, prec = v.exact, None
    elif args.method == "gamma" and q == args.p:
        v = hp_padic(d, args.p, args.N)
        value, prec = v.padic.to_fraction(), v.padic.prec
    else:
        v = hq_general(d, q, args.N)
        value, prec = v.padic.to_fraction(), v.padic.prec
    _emit({"datum": format_datum(d), "q": q, "method": v.method, "value": _frac(value), "precision": prec}, args)
    return EXIT_OK


def cmd_euler(args) -> int:
    from .euler import euler_factor, reduced_euler_factor
    from .modforms import legendre

    d = parse_datum(args.datum)
    if args.lam is not None:
        d = d.with_lambda(Fraction(args.lam))
    if args.full:
        f = euler_factor(d, args.p, args.degree)
        rem = None
    else:
        f, rem = reduced_euler_factor(d, args.p)
    if rem is not None:
        base = args.p ** ((d.n - 2) // 2)
        sign = rem.eigenvalue // base
        print(
            f"removed degenerate eigenvalue {rem.eigenvalue} ({rem.method}); "
            f"(3/p)={legendre(3, args.p)} (-3/p)={legendre(-3, args.p)} sign={sign}",
            file=sys.stderr,
        )
    _emit(json.dumps(list(f.coefficients)), args)
    return EXIT_OK


def _exit_for(rows: list[dict]) -> int:
    verdicts = {r["verdict"] for r in rows}
    if "fails" in verdicts:
        return EXIT_FAIL
    if "inconclusive" in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import catalog_group, run_catalog

    specs = catalog_group(args.catalog)
    rows = run_catalog(specs, parse_primes(args.primes), jobs=args.jobs)
    _emit(rows, args)
    bad = [r for r in rows if r["verdict"] != "holds"]
    for r in bad:
        print(f"{r['spec']} p={r['p']}: {r['verdict']} (lhs {r['lhs']}, rhs {r['rhs']})", file=sys.stderr)
    return _exit_for(rows)


def cmd_sequences(args) -> int:
    from .verify import compute_Ap, compute_Bp

    fn = compute_Ap if args.name == "A" else compute_Bp
    primes = parse_primes(args.primes)
    _emit({"name": args.name, "primes": primes, "values": [fn(p) for p in primes]}, args)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    from .modforms import FIXTURE_LABELS, CoefficientCache, FormRef, default_fixture_dir, fetch_ap

    cache = CoefficientCache(Path(args.dir) if args.dir else default_fixture_dir())
    labels = args.labels.split(",") if args.labels else list(FIXTURE_LABELS)
    if args.action == "list":
        _emit({"directory": str(cache.directory), "labels": cache.labels()}, args)
        return EXIT_OK
    if args.action == "check":
        missing = [lab for lab in labels if cache.load(lab) is None]
        _emit({"checked": labels, "missing": missing}, args)
        return EXIT_USAGE if missing else EXIT_OK
    # fetch
    for lab in labels:
        ref = FormRef.from_label(lab)
        fetch_ap(ref, 2, cache, allow_network=args.allow_network)
    _emit({"fetched": labels}, args)
    return EXIT_OK


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hgc", description="Hypergeometric character sums and supercongruences.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, datum=True):
        if datum:
            p.add_argument("--datum", required=True, help='"alpha=..; beta=..; lambda=.." or an alias (H1, H2, H5..H8)')
        p.add_argument("--out", help="write machine output here instead of stdout")

    p = sub.add_parser("profile", help="e(k) step profile, s, w, bottom interval")
    common(p)
    p.add_argument("--p", type=int)
    p.add_argument("--svg")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("truncate", help="truncated series F(alpha, beta; lambda)_m")
    common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--N", type=int, default=6)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("hp", help="finite hypergeometric sum H_q")
    common(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--N", type=int, default=6)
    p.add_argument("--method", choices=["gamma", "general", "complex"], default="gamma")
    p.set_defaults(func=cmd_hp)

    p = sub.add_parser("euler", help="local Euler factor as a JSON array, constant term first")
    common(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--full", action="store_true", help="keep the degenerate linear factor")
    p.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("verify", help="run a congruence catalog")
    common(p, datum=False)
    p.add_argument("--catalog", required=True, help="group name, spec id, or 'all'")
    p.add_argument("--primes", required=True, help="e.g. 7..31 or 7,11,13")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequences", help="the A_p / B_p sequences")
    common(p, datum=False)
    p.add_argument("--name", choices=["A", "B"], required=True)
    p.add_argument("--primes", default="7..67")
    p.set_defaults(func=cmd_sequences)

    p = sub.add_parser("fixtures", help="inspect or populate the coefficient cache")
    common(p, datum=False)
    p.add_argument("action", choices=["list", "check", "fetch"])
    p.add_argument("--labels")
    p.add_argument("--dir")
    p.add_argument("--allow-network", action="store_true")
    p.set_defaults(func=cmd_fixtures)
    return ap


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MissingFixtureError, TransportError) as exc:
        print(f"fixture error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (HGCError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
