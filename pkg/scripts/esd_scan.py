#!/usr/bin/env python3
"""Scan the damped-Werner family for entanglement sudden death: for each z,
report the death point p* (if one exists below p = 1) alongside the LAQC at
p = 0.99, which stays positive for every entangled start.

Usage: esd_scan.py [--steps 11]
"""

import argparse

import numpy as np

from laqc.channels import esd_threshold, werner_ad_closed_form
from laqc.closed_form import laqc_x


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=11)
    args = ap.parse_args()
    print(f"{'z':>6} {'p*':>12} {'laqc(p=0.99)':>14}")
    for z in np.linspace(0.0, 1.0, args.steps):
        try:
            p_star = f"{esd_threshold(z):.6f}"
        except ValueError:
            p_star = "unentangled"
        laqc, _ = laqc_x(werner_ad_closed_form(z, 0.99))
        print(f"{z:6.2f} {p_star:>12} {laqc:14.6e}")


if __name__ == "__main__":
    main()
