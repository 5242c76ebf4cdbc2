#!/usr/bin/env python3
"""Write all five figure-preset CSV datasets into an output directory.

Usage: generate_figure_data.py [--out DIR] [--count N]
"""

import argparse
import pathlib

from laqc.cli import PRESETS, write_preset_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data", help="output directory")
    ap.add_argument("--count", type=int, default=None, help="grid points per axis")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for preset in sorted(PRESETS):
        path = out / f"{preset}.csv"
        write_preset_csv(preset, path, n=args.count)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
