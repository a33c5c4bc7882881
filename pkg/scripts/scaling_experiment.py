#!/usr/bin/env python3
"""Push a seeded random symmetric input through growing output sizes.

For each output size l the single-site reduced output should equal the
reduced input contracted by m(l+d)/(l(m+d)) toward the maximally mixed
state; the table prints that factor next to the measured residual.
"""

import argparse

import numpy as np

from symclone.closed_forms import scaling_residual, scaling_residual_bloch, shrink
from symclone.cloner import clone_channel
from symclone.oracle import hermitian_sym_operator
from symclone.symspace import reduce_one


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d", type=int, default=2, help="levels per system")
    parser.add_argument("--m", type=int, default=2, help="input particle number")
    parser.add_argument("--max-l", type=int, default=10, help="largest output size")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    x = hermitian_sym_operator(args.d, args.m, rng)
    rin = reduce_one(x)
    lowest = float(np.linalg.eigvalsh(x.entries).min())
    print(f"d={args.d} m={args.m} seed={args.seed} min eigenvalue {lowest:.3f}")
    print(f"{'l':<4} {'eta':<10} {'eta float':<11} {'residual':<12} {'bloch residual':<12}")
    for l in range(args.m, args.max_l + 1):
        rout = reduce_one(clone_channel(x, l))
        eta = shrink(args.d, args.m, l)
        res = scaling_residual(rin, rout, args.d, args.m, l)
        res_b = scaling_residual_bloch(rin, rout, args.d, args.m, l)
        print(f"{l:<4} {str(eta):<10} {float(eta):<11.8f} {res:<12.3e} {res_b:<12.3e}")


if __name__ == "__main__":
    main()
