#!/usr/bin/env python3
"""Plot H(beta) and n0(beta) per l from a `qbell fig1` CSV.

Usage: plot_fig1.py fig1.csv [out.png]
"""
import csv
import sys
from collections import defaultdict

import matplotlib.pyplot as plt


def main():
    path = sys.argv[1]
    out = sys.argv[2] if len(sys.argv) > 2 else "fig1.png"
    curves_h = defaultdict(list)
    curves_n0 = defaultdict(list)
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            if row["status"] != "ok":
                continue
            l = float(row["l"])
            curves_h[l].append((float(row["beta"]), float(row["H"])))
            curves_n0[l].append((float(row["beta"]), float(row["n0"])))

    fig, (ax_h, ax_n0) = plt.subplots(1, 2, figsize=(10, 4))
    for l in sorted(curves_h):
        pts = sorted(curves_h[l])
        ax_h.plot([p[0] for p in pts], [p[1] for p in pts], label=f"l={l:g}")
        pts = sorted(curves_n0[l])
        ax_n0.plot([p[0] for p in pts], [p[1] for p in pts])
    ax_h.set_xlabel(r"$\beta$")
    ax_h.set_ylabel("H")
    ax_h.legend(fontsize=7)
    ax_n0.set_xlabel(r"$\beta$")
    ax_n0.set_ylabel(r"$n_0$")
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
