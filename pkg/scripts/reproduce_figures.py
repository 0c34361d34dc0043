#!/usr/bin/env python3
"""Run both preset sweeps and write fig1.csv / fig2.csv side by side.

Thin wrapper over `eur sweep`; point any plotting tool at the CSVs.
"""

import argparse
import sys
from pathlib import Path

from eur.cli import main as eur_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default=".", help="directory for the CSV files")
    parser.add_argument("--steps", type=int, default=101, help="grid points per sweep")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for preset in ("fig1", "fig2"):
        out = outdir / f"{preset}.csv"
        code = eur_main(
            ["sweep", "--preset", preset, "--steps", str(args.steps), "--out", str(out)]
        )
        if code != 0:
            return code
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
