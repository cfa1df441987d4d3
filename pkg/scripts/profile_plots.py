"""Write e(k) step plots (SVG and CSV) for the worked examples.

    python scripts/profile_plots.py --outdir plots
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from hgc.datum import parse_datum
from hgc.profile import export_profile_plot, profile

DATA = {
    "sextic_a": "alpha=1/2,1/2,1/2,1/2,1/3,2/3; beta=1,1,1,1,1/6,5/6",
    "quartic_disconnected": "alpha=1/2,1/2,1/6,5/6; beta=1,1,1/3,2/3",
    "sextic_b": "alpha=1/2,1/2,1/3,2/3,1/3,2/3; beta=1,1,1/6,5/6,1/6,5/6",
    "sextic_c": "alpha=1/2,1/2,1/2,1/2,1/6,5/6; beta=1,1,1,1,1/3,2/3",
    "quintic_half": "alpha=1/2,1/2,1/2,1/2,1/2; beta=1,1,1,1,1",
}


@dataclass
class PlotConfig:
    outdir: str = "plots"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default=PlotConfig.outdir)
    cfg = PlotConfig(**vars(ap.parse_args()))
    out = Path(cfg.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in DATA.items():
        pr = profile(parse_datum(text))
        export_profile_plot(pr, "svg", out / f"{name}.svg")
        export_profile_plot(pr, "csv", out / f"{name}.csv")
        bottom = " U ".join(f"[{lo}, {hi}]" for lo, hi in pr.bottom)
        print(f"{name:22s} s={pr.s:+d} w={pr.w} I={bottom}")


if __name__ == "__main__":
    main()
