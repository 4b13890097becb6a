#!/usr/bin/env python3
"""Sweep the closed-form count across field orders for a fixed dimension.

Prints one table per field order: the exact count for every profile
(r, s), the share of all q^(g^2) maps it represents, and the corollary
rows (invertible and nilpotent totals).  Formula routes only, so large
q and g are fine.

    python3 scripts/count_sweep.py --g 3 --orders 2,3,4,5,7,9
"""

import argparse
import sys

from semicount.counting import formula_table, gl_order, profiles


def print_table(g: int, q: int) -> None:
    table = formula_table(g, q)
    total = table.total
    print(f"q = {q}, g = {g}, q^(g^2) = {total}")
    width = max(len(str(n)) for n in table.entries.values())
    for r, s in profiles(g):
        n = table.entries[(r, s)]
        share = n / total
        bar = "#" * round(40 * share)
        print(f"  r={r} s={s}  {n:>{width}}  {share:8.2%}  {bar}")
    nilpotent = sum(table.entries[(r, 0)] for r in range(g + 1))
    print(f"  invertible: {table.entries[(g, g)]} (= order of the general "
          f"linear group: {gl_order(g, q)})")
    print(f"  nilpotent:  {nilpotent} (= q^(g^2-g) = {q ** (g * g - g)})")
    print()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--g", type=int, default=3, help="dimension (default 3)")
    parser.add_argument("--orders", default="2,3,4,5,7,8,9",
                        help="comma-separated prime powers to sweep")
    args = parser.parse_args(argv)
    orders = [int(tok) for tok in args.orders.split(",") if tok]
    for q in orders:
        print_table(args.g, q)
    return 0


if __name__ == "__main__":
    sys.exit(main())
