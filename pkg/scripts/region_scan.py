"""Plot P(x⊗c -> y⊗c) against the qubit-catalyst ratio t = c2/c1, shading the predicted region.

usage: python scripts/region_scan.py X Y [--resolution N] [--out PATH]
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from catalysis import make_pair, region2
from catalysis.oracle import scan_region2
from catalysis.probvec import make_probvec, parse_vector


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("x")
    ap.add_argument("y")
    ap.add_argument("--resolution", type=int, default=400)
    ap.add_argument("--out", default="region_scan.png")
    args = ap.parse_args()

    pair = make_pair(make_probvec(parse_vector(args.x), normalize=True),
                     make_probvec(parse_vector(args.y), normalize=True))
    samples = scan_region2(pair, args.resolution)
    ts = [float(s.t) for s in samples]
    ps = [float(s.p_after) for s in samples]

    fig, ax = plt.subplots(figsize=(6, 3.5))
    for lo, hi in region2(pair):
        ax.axvspan(float(lo), float(hi), color="tab:green", alpha=0.15)
    ax.plot(ts, ps, lw=1.2, label=r"$P(x\otimes c\to y\otimes c)$")
    ax.axhline(float(pair.p), color="k", ls="--", lw=0.8, label=r"$P(x\to y)$")
    ax.set_xlabel(r"$t = c_2/c_1$")
    ax.set_ylabel("max. probability")
    ax.set_title(f"x={pair.x}, y={pair.y}", fontsize=8)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    print(f"wrote {args.out}; predicted region {region2(pair)}")


if __name__ == "__main__":
    main()
