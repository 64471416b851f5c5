#!/usr/bin/env python3
"""Plot H versus the mode-A output photon number from a `qbell fig5` CSV.

Usage: plot_fig5.py fig5.csv [out.png]
"""
import csv
import sys
from collections import defaultdict

import matplotlib.pyplot as plt


def main():
    path = sys.argv[1]
    out = sys.argv[2] if len(sys.argv) > 2 else "fig5.png"
    curves = defaultdict(list)
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            if row["status"] != "ok":
                continue
            curves[float(row["eta"])].append(
                (float(row["n_out_A"]), float(row["H"])))

    fig, ax = plt.subplots(figsize=(6, 4.5))
    for eta in sorted(curves):
        pts = sorted(curves[eta])
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o",
                label=f"eta={eta:g}")
    ax.set_xlabel(r"$n_{out,A}$")
    ax.set_ylabel("H")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
