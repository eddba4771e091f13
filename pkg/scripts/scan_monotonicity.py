#!/usr/bin/env python3
"""Exhaustive counterexample scan for growth monotonicity.

Tests, for every triple of equal weight up to --max-weight, that the
Kronecker coefficient does not decrease under the diagonal hook step
(one box added to the first row and one to the first column of each
argument).  Findings are printed verbatim as JSON; an empty list is the
expected outcome.

    python scripts/scan_monotonicity.py --max-weight 5 --jobs 2
"""

import argparse
import json
import sys

from kronlab.stability import scan_conjecture_510


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-weight", type=int, default=5)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    report = scan_conjecture_510(args.max_weight, jobs=args.jobs)
    print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    print(
        f"{report.triples_checked} triples in {report.elapsed:.2f}s; "
        f"{len(report.counterexamples)} counterexample(s)",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
