#!/usr/bin/env python3
"""Plot beta_opt(l), theta_opt(l), H(l), E(l) and H(E) from a `qbell fig234` CSV.

Usage: plot_fig234.py fig234.csv [out.png]
"""
import csv
import sys
from collections import defaultdict

import matplotlib.pyplot as plt


def main():
    path = sys.argv[1]
    out = sys.argv[2] if len(sys.argv) > 2 else "fig234.png"
    rows = defaultdict(list)
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            if row["status"] != "ok":
                continue
            rows[float(row["n_in"])].append(row)

    fig, axes = plt.subplots(2, 3, figsize=(13, 7))
    panels = [
        ("beta_opt", axes[0][0], r"$\beta_{opt}$"),
        ("theta_opt", axes[0][1], r"$\theta_{opt}$"),
        ("H", axes[0][2], "H"),
        ("E", axes[1][0], "E"),
    ]
    for n_in in sorted(rows):
        pts = sorted(rows[n_in], key=lambda r: float(r["l"]))
        ls = [float(r["l"]) for r in pts]
        for col, ax, _ in panels:
            ax.plot(ls, [float(r[col]) for r in pts], label=f"n_in={n_in:g}")
        positive = [r for r in pts if float(r["l"]) > 0]
        axes[1][1].plot([float(r["E"]) for r in positive],
                        [float(r["H"]) for r in positive],
                        label=f"n_in={n_in:g}")
    for col, ax, label in panels:
        ax.set_xlabel("l")
        ax.set_ylabel(label)
    axes[1][1].set_xlabel("E")
    axes[1][1].set_ylabel("H")
    axes[0][0].legend(fontsize=7)
    axes[1][2].axis("off")
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
