#!/usr/bin/env python3
"""Cross-check the closed-form quantifiers against the numerical two-stage
search on random symmetric and anti-symmetric X states and print the worst
absolute deviations.

Usage: compare_oracle.py [--n 50] [--seed 0] [--grid 16]
"""

import argparse

import numpy as np

from laqc.closed_form import classical_correlations_x, laqc_x
from laqc.oracle import SearchConfig, laqc_numeric
from laqc.states import XStateParams, density_from_bloch, x_state_eigenvalues


def sample(rng, symmetry):
    while True:
        v = rng.uniform(-1.0, 1.0, size=5)
        v[1] = v[0] if symmetry == "sym" else -v[0]
        p = XStateParams(*v)
        if x_state_eigenvalues(p).min() >= 0.0:
            return p


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=50, help="states per symmetry class")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--grid", type=int, default=16)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    cfg = SearchConfig(grid=args.grid)
    for symmetry in ("sym", "anti"):
        worst_c = worst_l = 0.0
        for _ in range(args.n):
            p = sample(rng, symmetry)
            rep = laqc_numeric(density_from_bloch(p.to_fano()), cfg)
            worst_c = max(worst_c, abs(classical_correlations_x(p)[0] - rep.classical))
            worst_l = max(worst_l, abs(laqc_x(p)[0] - rep.laqc))
        print(
            f"{symmetry:5s}  n={args.n}  max |closed - numeric|: "
            f"classical {worst_c:.3e}  laqc {worst_l:.3e}"
        )


if __name__ == "__main__":
    main()
