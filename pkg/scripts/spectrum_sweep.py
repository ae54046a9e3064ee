"""Compare the three mst-spectrum routes on random integer spaces and report timings."""

import argparse
import time

import numpy as np

from msgeo import diameter
from msgeo.random_spaces import random_space
from msgeo.trees import mst_length, mst_spectrum, mst_spectrum_by_gh, mst_spectrum_by_partitions


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cases", type=int, default=200)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    gen = np.random.default_rng(args.seed)
    clock = {"edges": 0.0, "partitions": 0.0, "gh": 0.0}
    worst = 0.0
    for _ in range(args.cases):
        X = random_space(gen, 3, args.n_max)
        t0 = time.perf_counter()
        a = np.array(mst_spectrum(X))
        t1 = time.perf_counter()
        b = np.array(mst_spectrum_by_partitions(X))
        t2 = time.perf_counter()
        c, length = mst_spectrum_by_gh(X, 2 * diameter(X))
        t3 = time.perf_counter()
        clock["edges"] += t1 - t0
        clock["partitions"] += t2 - t1
        clock["gh"] += t3 - t2
        worst = max(worst, np.abs(a - b).max(), np.abs(a - np.array(c)).max(),
                    abs(length - mst_length(X)))
    print(f"{args.cases} spaces, n in [3, {args.n_max}], max deviation {worst:.3e}")
    for route, secs in clock.items():
        print(f"  {route:<11} {secs:8.3f}s")


if __name__ == "__main__":
    main()
