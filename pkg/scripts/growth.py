"""Largest entry (in bits) of the echelon tableau, Nine Chapters versus Chio."""

import argparse
import statistics

from fangcheng.corpus import random_system, rng_for
from fangcheng.eliminate import PivotPolicy, PivotStrategy, forward_eliminate
from fangcheng.tableau import from_system, max_bit_length


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[3, 4, 5, 6, 7, 8, 9, 10])
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--range", dest="entry_range", type=int, default=9)
    args = ap.parse_args()

    print(f"{'n':>3} {'nine bits':>10} {'chio bits':>10} {'ratio':>7}")
    for n in args.sizes:
        nine, chio = [], []
        for r in range(args.trials):
            coeffs, rhs, _ = random_system(rng_for(args.seed + n, r), n, args.entry_range)
            t = from_system(coeffs, rhs)
            for s, acc in ((PivotStrategy.NINE_CHAPTERS, nine), (PivotStrategy.CHIO, chio)):
                acc.append(max_bit_length(forward_eliminate(t, s, PivotPolicy.STRICT)[0]))
        a, b = statistics.mean(nine), statistics.mean(chio)
        print(f"{n:>3} {a:>10.1f} {b:>10.1f} {a / b:>7.2f}")


if __name__ == "__main__":
    main()
