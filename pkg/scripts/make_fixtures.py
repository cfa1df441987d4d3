"""Regenerate the committed a_p fixtures with PARI/GP (via cypari2).

Newforms are identified by LMFDB label N.k.c.x: Hecke orbits in the new
space are sorted by dimension, then by the integer trace vector
(tr a_1, tr a_2, ...) lexicographically, and x enumerates them a, b, c, ...
Only coefficients that are rational integers are written out.

    python scripts/make_fixtures.py [--out DIR] [--bound 101]
"""

from __future__ import annotations

import argparse
import datetime as dt
from pathlib import Path

import cypari2

from hgc.modforms import FIXTURE_LABELS, CoefficientCache, FormRef, default_fixture_dir
from hgc.padic import primes_between

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9)

TRACE_DEPTH = 60


def _space(level: int, weight: int, conrey: int):
    if conrey == 1:
        return pari.mfinit([level, weight], 0)
    return pari.mfinit([level, weight, pari.Mod(conrey, level)], 0)


def _orbit_traces(mf, depth: int) -> list[tuple[int, list[int], object]]:
    out = []
    for f in pari.mfeigenbasis(mf):
        emb = pari.mfembed(f, pari.mfcoefs(f, depth))
        rows = [emb] if str(pari.type(emb[0])) != "t_VEC" else list(emb)
        # trace form: sum over the complex embeddings of the orbit
        traces = [int(pari.round(pari.real(sum(r[i] for r in rows)))) for i in range(depth + 1)]
        out.append((len(rows), traces, f))
    return out


def labelled_newform(label: str):
    level, weight, conrey, letter = label.split(".")
    level, weight, conrey = int(level), int(weight), int(conrey)
    mf = _space(level, weight, conrey)
    orbits = sorted(_orbit_traces(mf, TRACE_DEPTH), key=lambda o: (o[0], o[1]))
    idx = ord(letter) - ord("a")
    _, _, f = orbits[idx]
    return f, weight, level


def rational_coefficients(f, bound: int) -> dict[int, int]:
    """a_p for the primes where every embedding gives the same integer."""
    emb = pari.mfembed(f, pari.mfcoefs(f, bound))
    rows = [emb] if str(pari.type(emb[0])) != "t_VEC" else list(emb)
    out = {}
    for p in primes_between(2, bound):
        vals = {complex(r[p]) for r in rows}
        if len(vals) != 1:
            continue
        z = vals.pop()
        if abs(z.imag) < 1e-9 and abs(z.real - round(z.real)) < 1e-9:
            out[p] = int(round(z.real))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=default_fixture_dir())
    ap.add_argument("--bound", type=int, default=101)
    args = ap.parse_args()
    cache = CoefficientCache(args.out)
    today = dt.date.today().isoformat()
    for label in FIXTURE_LABELS:
        f, weight, level = labelled_newform(label)
        # nebentypus forms keep only the primes where a_p is rational
        ap_map = rational_coefficients(f, args.bound)
        cache.store(
            FormRef(label, weight, level),
            ap_map,
            source=f"PARI/GP {pari.version()} mfinit/mfeigenbasis, LMFDB orbit ordering",
            fetched=today,
        )
        print(label, {p: ap_map[p] for p in list(ap_map)[:6]})


if __name__ == "__main__":
    main()
