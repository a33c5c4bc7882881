#!/usr/bin/env python3
"""Two-stage cloning against direct cloning over a whole (n, m, l) grid.

Cloning n -> m and then feeding the (mixed, entangled) output into a second
cloner for m -> l lands on exactly the direct n -> l output; the printed
deviation is the worst matrix entry difference per triple.
"""

import argparse

import numpy as np

from symclone.cloner import concatenate


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d", type=int, default=3, help="levels per system")
    parser.add_argument("--max-l", type=int, default=6, help="largest copy count")
    args = parser.parse_args()

    worst = 0.0
    print(f"{'n':<3} {'m':<3} {'l':<3} {'max deviation':<14}")
    for n in range(1, args.max_l + 1):
        for m in range(n, args.max_l + 1):
            for l in range(m, args.max_l + 1):
                via, direct = concatenate(args.d, n, m, l)
                deviation = float(np.max(np.abs(via.entries - direct.entries)))
                worst = max(worst, deviation)
                print(f"{n:<3} {m:<3} {l:<3} {deviation:<14.3e}")
    print(f"worst over the grid: {worst:.3e}")


if __name__ == "__main__":
    main()
