#!/usr/bin/env python3
"""Empirical validation of the stability region and the default threshold.

For every triple of the chosen base weight, sample Dom up to the given m,
run the two-value verification (the grown coefficient must depend only on
the parity of a+b+c), and print a summary line per triple with a nonempty
sample.  A violation would falsify the default threshold function and is
reported with its witnesses.

    python scripts/stability_report.py --weight 3 --extra-m 4
"""

import argparse
import sys
import time

from kronlab.partitions import format_partition, partitions_of
from kronlab.stability import TwoValueViolation, dom_sample, two_value_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--weight", type=int, default=3, help="base triple weight")
    parser.add_argument(
        "--extra-m", type=int, default=4, help="sample Dom up to m = weight + extra-m"
    )
    args = parser.parse_args()

    started = time.monotonic()
    parts = partitions_of(args.weight)
    checked = violations = 0
    for la in parts:
        for mu in parts:
            for nu in parts:
                region = dom_sample(la, mu, nu, args.weight + args.extra_m)
                if not region:
                    continue
                checked += 1
                names = " ".join(format_partition(p) for p in (la, mu, nu))
                try:
                    values = two_value_check(la, mu, nu, region)
                except TwoValueViolation as exc:
                    violations += 1
                    print(f"[{names}] VIOLATION: {exc}")
                    continue
                print(
                    f"[{names}] {len(region)} vectors: even={values.even} odd={values.odd}"
                )
    print(
        f"{checked} nonempty regions checked, {violations} violation(s), "
        f"{time.monotonic() - started:.1f}s",
        file=sys.stderr,
    )
    return 1 if violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
