"""Larger random campaign: 2D criterion and existence construction against the oracle.

Reports disagreement counts per dimension and the distribution of the constructed
catalyst length k.  Deterministic for a given seed.

usage: python scripts/oracle_campaign.py [--pairs N] [--seed S] [--max-n N] [--workers W]
"""

import argparse
import statistics
import time
from collections import defaultdict

from catalysis.sweep import sweep_random


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--resolution", type=int, default=50)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = sweep_random(args.seed, args.pairs, args.resolution, dims=tuple(range(3, args.max_n + 1)),
                        workers=args.workers)
    elapsed = time.perf_counter() - t0

    grid = [r for r in rows if not r.catalyst.startswith(("geometric", "search"))]
    ks = [int(r.catalyst.split("k=")[1].rstrip(")")) for r in rows if r.catalyst.startswith("geometric")]
    by_pair = defaultdict(list)
    for r in grid:
        by_pair[r.pair_id].append(r.useful_oracle)

    print(f"{len(rows)} rows in {elapsed:.1f}s, disagreements: {sum(not r.agree for r in rows)}")
    print(f"pairs with a useful qubit ratio on the grid: {sum(any(v) for v in by_pair.values())}/{len(by_pair)}")
    if ks:
        print(f"constructed k: min {min(ks)}, median {statistics.median(ks)}, max {max(ks)}")


if __name__ == "__main__":
    main()
