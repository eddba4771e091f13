#!/usr/bin/env python3
"""Regenerate the B-coefficient table and diff it against the shipped
reference fixture.

    python scripts/reproduce_tables.py [--max-weight 3] [--format csv]

Prints the rendered table to stdout and the diff summary to stderr;
exits nonzero if any cell disagrees with the fixture (only meaningful at
--max-weight 3, the fixture's range).
"""

import argparse
import sys
import time

from kronlab.tables import diff_against_fixture, generate_table, render


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-weight", type=int, default=3)
    parser.add_argument("--format", choices=("csv", "json", "latex"), default="csv")
    args = parser.parse_args()

    started = time.monotonic()
    rows = generate_table(args.max_weight)
    elapsed = time.monotonic() - started
    print(render(rows, args.format), end="")

    if args.max_weight == 3:
        mismatches = diff_against_fixture(rows)
        if mismatches:
            for mismatch in mismatches:
                print(f"MISMATCH {mismatch}", file=sys.stderr)
            return 1
        print(
            f"all {len(rows)} rows x 3 columns match the fixture ({elapsed:.2f}s)",
            file=sys.stderr,
        )
    else:
        print(f"{len(rows)} rows in {elapsed:.2f}s (no fixture at this weight)", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
