#!/usr/bin/env python3
"""Survey cycle structure of the block permutations over a parameter grid.

For each (p, n, l, r) prints cycle count, fixed points, longest cycle and
permutation order as CSV. Useful for spotting how the order grows with the
block width and how much of the block the map leaves untouched.
"""

from __future__ import annotations

import argparse
import sys

from powerperm.analysis import cycle_structure
from powerperm.coding import CodingParams, permutation_table


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5])
    parser.add_argument("--nmax", type=int, default=6)
    parser.add_argument("--size-cap", type=int, default=4096,
                        help="skip blocks with more than this many values")
    parser.add_argument("--out", help="write CSV here instead of stdout")
    args = parser.parse_args()

    rows = ["p,n,l,r,size,cycles,fixed,longest,order"]
    for p in args.primes:
        for n in range(1, args.nmax + 1):
            for r in range(1, p):
                l = 1
                while p**l <= args.size_cap:
                    params = CodingParams.make(p=p, n=n, l=l, r=r)
                    report = cycle_structure(permutation_table(params))
                    rows.append(
                        f"{p},{n},{l},{r},{params.size()},{report.cycle_count},"
                        f"{len(report.fixed_points)},{report.cycle_lengths[-1]},"
                        f"{report.order}"
                    )
                    l += 1

    text = "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
        print(f"wrote {len(rows) - 1} rows to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
