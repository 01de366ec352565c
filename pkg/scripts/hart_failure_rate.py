"""How often the cross-multiplying backward phase hits an inexact division.

Random nonsingular systems are eliminated forward with each integer strategy
(row swaps allowed) and then handed to the backward phase.
"""

import argparse

from fangcheng.corpus import random_system, rng_for
from fangcheng.diagonalize import hart_backward
from fangcheng.eliminate import PivotPolicy, PivotStrategy, forward_eliminate
from fangcheng.errors import InexactDivision
from fangcheng.tableau import from_system


def failure_rate(strategy, n, trials, seed, entry_range):
    failed = 0
    for r in range(trials):
        coeffs, rhs, _ = random_system(rng_for(seed, r), n, entry_range, leading_minors=False)
        echelon, _ = forward_eliminate(from_system(coeffs, rhs), strategy, PivotPolicy.SWAP)
        try:
            hart_backward(echelon)
        except InexactDivision:
            failed += 1
    return failed / trials


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--range", dest="entry_range", type=int, default=9)
    args = ap.parse_args()

    print(f"{'n':>3} {'nine':>7} {'chio':>7}")
    for n in args.sizes:
        rates = [failure_rate(s, n, args.trials, args.seed + n, args.entry_range)
                 for s in (PivotStrategy.NINE_CHAPTERS, PivotStrategy.CHIO)]
        print(f"{n:>3} {rates[0]:>7.3f} {rates[1]:>7.3f}")


if __name__ == "__main__":
    main()
