"""Linear Euler-factor coefficients and the combined trace list.

    python scripts/trace_list.py --primes 7..31

Prints, per prime, -c_1(H1) + (-3/p) p c_1(H2) where c_1 is the linear
coefficient of the reduced Euler factor, plus the removed degenerate root.
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from hgc.cli import parse_primes
from hgc.datum import ALIASES
from hgc.euler import reduced_euler_factor
from hgc.modforms import legendre


@dataclass
class TraceConfig:
    primes: str = "7..31"
    out: str | None = None


def run(cfg: TraceConfig) -> list[dict]:
    rows = []
    for p in parse_primes(cfg.primes):
        t0 = time.perf_counter()
        f1, rem1 = reduced_euler_factor(ALIASES["H1"], p)
        f2, rem2 = reduced_euler_factor(ALIASES["H2"], p)
        value = -f1.coefficient(1) + legendre(-3, p) * p * f2.coefficient(1)
        rows.append(
            {
                "p": p,
                "trace": value,
                "H1_root": rem1.eigenvalue,
                "H1_method": rem1.method,
                "H2_root": rem2.eigenvalue,
                "seconds": round(time.perf_counter() - t0, 2),
            }
        )
        print(f"p={p:3d}  trace={value:7d}  H1 root {rem1.eigenvalue:+d} ({rem1.method})  H2 root {rem2.eigenvalue:+d}")
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", default=TraceConfig.primes)
    ap.add_argument("--out")
    cfg = TraceConfig(**vars(ap.parse_args()))
    rows = run(cfg)
    print("list:", [r["trace"] for r in rows])
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=1)


if __name__ == "__main__":
    main()
