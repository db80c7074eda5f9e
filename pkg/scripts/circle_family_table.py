#!/usr/bin/env python3
"""Tabulate the positivity-domain predicates of the isolated-origin family.

At every finite truncation depth the origin remains an isolated point, so
the set is symmetric and contains zero yet never contains a symmetric
open neighbourhood of it; the closure-of-interior property would require
the full infinite union.
"""

import argparse

from posext import cexi_truncation, is_positivity_domain_star


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-depth", type=int, default=10)
    args = ap.parse_args()

    header = f"{'depth':>5}  {'pieces':>6}  {'sym':>5}  {'0 in E':>6}  {'cl(int)':>7}  {'sq-gen':>6}"
    print(header)
    print("-" * len(header))
    for depth in range(1, args.max_depth + 1):
        e = cexi_truncation(depth)
        flags = is_positivity_domain_star(e)
        print(
            f"{depth:>5}  {len(e.intervals):>6}  {str(flags.symmetric):>5}  "
            f"{str(flags.contains_zero):>6}  {str(flags.closure_of_interior):>7}  "
            f"{str(flags.generated_by_squares):>6}"
        )


if __name__ == "__main__":
    main()
