"""Tabulate edge-cover counts over all small bipartite graphs and even cycles."""

import argparse
from collections import Counter

from msgeo.combinatorics import all_bipartite_graphs, count_edge_covers, cycle_bipartite, cycle_matching_count


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=6)
    parser.add_argument("--max-cycle", type=int, default=7, help="largest k for the cycle C_2k")
    args = parser.parse_args()

    tally = Counter(count_edge_covers(g) for g in all_bipartite_graphs(args.max_vertices))
    tally.pop(0, None)
    print(f"edge-cover counts over bipartite graphs with p+q <= {args.max_vertices}:")
    print("  " + ", ".join(f"{c} (x{k})" for c, k in sorted(tally.items())))
    missing = [c for c in range(1, 41) if c not in tally]
    print(f"  values up to 40 not attained: {missing}")
    print("even cycles:")
    for k in range(2, args.max_cycle + 1):
        print(f"  C_{2 * k}: covers {count_edge_covers(cycle_bipartite(k))}, "
              f"matchings {cycle_matching_count(2 * k)}")


if __name__ == "__main__":
    main()
