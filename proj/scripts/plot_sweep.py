#!/usr/bin/env python3
"""Plot |M|, |M+-|, the relative phase and N, N+- from a `harvest sweep` CSV."""
import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv")
    ap.add_argument("-o", "--out", default=None, help="image path (default: CSV name with .png)")
    ap.add_argument("--d", type=float, default=None, help="select one separation from a 2D sweep")
    args = ap.parse_args()

    df = pd.read_csv(args.csv)
    df = df[df["status"] == "ok"]
    if args.d is not None:
        df = df[np.isclose(df["d"], args.d)]
    if df.empty:
        raise SystemExit("no ok rows to plot")
    x = df["sweep_value"]
    xlabel = "d" if df["d"].nunique() > 1 and df["delta_t"].nunique() == 1 else "delta_t"

    fig, ax = plt.subplots(3, 1, sharex=True, figsize=(6, 8))
    ax[0].plot(x, df["abs_M"], "k-", label="|M|")
    ax[0].plot(x, df["abs_M_plus"], "b--", label="|M+|")
    ax[0].plot(x, df["abs_M_minus"], "r:", label="|M-|")
    ax[0].legend()
    ax[1].plot(x, df["dgamma"], "k.-")
    ax[1].set_ylabel("dgamma")
    ax[1].set_ylim(-np.pi, np.pi)
    ax[2].plot(x, df["N"], "k-", label="N")
    ax[2].plot(x, df["N_plus"], "b--", label="N+")
    ax[2].plot(x, df["N_minus"], "r:", label="N-")
    ax[2].legend()
    ax[2].set_xlabel(xlabel)
    if xlabel == "delta_t":
        d = df["d"].iloc[0]
        for a in ax:
            for s in (-d, d):
                a.axvline(s, color="y", lw=0.8)
    fig.tight_layout()
    fig.savefig(args.out or args.csv.rsplit(".", 1)[0] + ".png", dpi=150)


if __name__ == "__main__":
    main()
