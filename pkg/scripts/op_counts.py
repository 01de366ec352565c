"""Multiplicative operation counts, elimination + back substitution vs Gauss-Jordan."""

import argparse

from fangcheng.diagonalize import op_count_compare
from fangcheng.eliminate import PivotStrategy


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    strategies = list(PivotStrategy)
    print(f"{'n':>3} " + " ".join(f"{s.value + ' ge':>9} {s.value + ' gj':>9} {'ratio':>6}"
                                  for s in strategies))
    for n in range(2, args.max_n + 1):
        cells = []
        for s in strategies:
            rep = op_count_compare(n, s, args.seed)
            cells.append(f"{rep.ge.multiplicative:>9} {rep.gj.multiplicative:>9} "
                         f"{float(rep.ratio):>6.3f}")
        print(f"{n:>3} " + " ".join(cells))


if __name__ == "__main__":
    main()
