#!/usr/bin/env python3
"""Tabulate the alternating-group central unit rank next to the
constructive lower bound, over a range of degrees.

The exact rank counts distinct-odd partitions with the congruence and
non-square conditions; the bound places partitions below a large prime
and is listed with its (p, k, m) parameters.
"""

import argparse
import sys

sys.path.insert(0, "src")

from galorb.altcount import frobenius_rank, prop8_lower_bound


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--start", type=int, default=26)
    ap.add_argument("--stop", type=int, default=120)
    args = ap.parse_args()

    print("    n  rank  bound  parameters")
    for n in range(args.start, args.stop + 1):
        rank = frobenius_rank(n)
        if n < 26:
            print(f"{n:5d} {rank:5d}      -  (bound starts at n = 26)")
            continue
        b = prop8_lower_bound(n)
        if b.feasible:
            tail = f"(p, k, m) = ({b.p}, {b.k}, {b.m})"
            print(f"{n:5d} {rank:5d} {b.count:6d}  {tail}")
        else:
            print(f"{n:5d} {rank:5d}      0  {b.diagnostic}")


if __name__ == "__main__":
    main()
