"""Run congruence catalogs over a prime range and tabulate the verdicts.

    python scripts/run_catalog.py --catalog all --primes 5..31 --jobs 4 --out report.json
"""

from __future__ import annotations

import argparse
import collections
import json
import time
from dataclasses import asdict, dataclass

from hgc.cli import parse_primes
from hgc.verify import catalog_group, run_catalog


@dataclass
class CatalogConfig:
    catalog: str = "all"
    primes: str = "5..31"
    jobs: int = 1
    out: str | None = None


def summarize(rows: list[dict]) -> dict[str, dict[str, list[int]]]:
    table: dict[str, dict[str, list[int]]] = collections.defaultdict(lambda: collections.defaultdict(list))
    for r in rows:
        table[r["spec"]][r["verdict"]].append(r["p"])
    return {k: dict(v) for k, v in sorted(table.items())}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--catalog", default=CatalogConfig.catalog)
    ap.add_argument("--primes", default=CatalogConfig.primes)
    ap.add_argument("--jobs", type=int, default=CatalogConfig.jobs)
    ap.add_argument("--out")
    cfg = CatalogConfig(**vars(ap.parse_args()))

    t0 = time.perf_counter()
    rows = run_catalog(catalog_group(cfg.catalog), parse_primes(cfg.primes), jobs=cfg.jobs)
    summary = summarize(rows)
    width = max(len(k) for k in summary)
    for spec, verdicts in summary.items():
        parts = "  ".join(f"{v}: {ps}" for v, ps in sorted(verdicts.items()))
        print(f"{spec:<{width}}  {parts}")
    print(f"{len(rows)} checks in {time.perf_counter() - t0:.1f}s")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=1)


if __name__ == "__main__":
    main()
