#!/usr/bin/env python3
"""Emit plot-ready CSV for the two geometry sweeps.

  python3 scripts/sweep_curves.py wedge > wedge_sweep.csv
  python3 scripts/sweep_curves.py cone  > cone_sweep.csv

Wedge sweep: fundamental TM frequency vs azimuthal opening, showing the
monotone descent toward the thin-sheet limit and the jump back to integer m
at the full circle.  Cone sweep: branch-1 zonal TM eigenvalue and frequency
vs cone half-angle.
"""

import sys

import numpy as np

from sphcav.spectrum import CavityConfig, cone_sweep, wedge_sweep

A15 = CavityConfig(radius_m=0.015)


def emit_wedge() -> None:
    openings = [float(x) for x in np.arange(120.0, 359.0, 5.0)] + [359.0, 360.0]
    print("opening_deg,m1,f_ghz")
    for row in wedge_sweep(A15, openings):
        print(f"{row['opening_deg']!r},{row['m1']!r},{row['f_ghz']!r}")


def emit_cone() -> None:
    thetas = [float(x) for x in np.arange(0.5, 34.0, 0.5)]
    print("theta_c_deg,nu,f_ghz")
    for row in cone_sweep(A15, thetas):
        print(f"{row['theta_c_deg']!r},{row['nu']!r},{row['f_ghz']!r}")


if __name__ == "__main__":
    which = sys.argv[1] if len(sys.argv) > 1 else "wedge"
    if which == "wedge":
        emit_wedge()
    elif which == "cone":
        emit_cone()
    else:
        print(f"unknown sweep {which!r}; use wedge|cone", file=sys.stderr)
        sys.exit(1)
