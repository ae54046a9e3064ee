"""Count sets in s-position between the alternate vertex triples of a regular hexagon."""

import argparse

import numpy as np

from msgeo.hausdorff import count_s_position_sets, hausdorff, segment_candidates


def hexagon(side: float = 1.0) -> np.ndarray:
    ang = np.arange(6) * np.pi / 3
    return side * np.c_[np.cos(ang), np.sin(ang)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=8, help="interior sample points of s in (0, r)")
    args = parser.parse_args()

    _, pair, _ = segment_candidates(hexagon(), [0, 2, 4], [1, 3, 5], 0.5)
    r = hausdorff(pair)
    print(f"d_H(A, B) = {r:.6f}")
    print(f"{'s':>8} {'#C_s':>5} {'count':>6}")
    for s in np.linspace(0, r, args.steps + 2)[1:-1]:
        _, pair, new = segment_candidates(hexagon(), [0, 2, 4], [1, 3, 5], float(s))
        print(f"{s:8.4f} {len(new):5d} {count_s_position_sets(pair, new, float(s)):6d}")


if __name__ == "__main__":
    main()
