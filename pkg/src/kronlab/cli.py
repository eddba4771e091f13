"""Command-line front end.

Subcommands: kron, reduced, bcoeff, bounds, table, scan-conjecture,
stability.  Values go to stdout (machine readable, deterministic:
identical invocations give byte-identical stdout); progress and timing go
to stderr; an optional --report file records command, inputs, outputs,
elapsed time and character-table cache statistics.

Exit codes: 0 success, 2 malformed input, 3 resource-guard refusal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .bounds import column_bounds, leading_coefficient, row_bounds, sharpness_predicate
from .characters import cache_stats, character_table
from .errors import ResourceLimitError
from .genfunc import b_coefficient, b_series_hook_form, cached_theorem_series
from .kronecker import (
    DEFAULT_MAX_WEIGHT,
    GrowthVector,
    grown_triple,
    kronecker,
    reduced_kronecker,
)
from .partitions import Partition, format_partition, parse_partition, weight
from .stability import (
    StabilityParams,
    default_threshold,
    dom_contains,
    growth_cone_contains,
    linear_forms,
    scan_conjecture_510,
    semigroup_decompose,
    setl4_contains,
)
from .symfunc import series_to_json
from .tables import RENDER_FORMATS, diff_against_fixture, generate_table, render


def default_cache_dir() -> str:
    env = os.environ.get("KRONLAB_CACHE_DIR")
    if env:
        return env
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "kronlab")


@dataclass
class Config:
    max_character_table_n: int = DEFAULT_MAX_WEIGHT
    cache_dir: str | None = field(default_factory=default_cache_dir)
    output_format: str = "text"
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.max_character_table_n < 1:
            raise ValueError("max character-table weight must be >= 1")
        if self.cache_dir is not None and not _writable_dir(self.cache_dir):
            print(
                f"warning: cache directory {self.cache_dir!r} is not writable; "
                "caching disabled",
                file=sys.stderr,
            )
            self.cache_dir = None


def _writable_dir(path: str) -> bool:
    try:
        os.makedirs(path, exist_ok=True)
        return os.access(path, os.W_OK)
    except OSError:
        return False


def _warm(config: Config, weights: list[int]) -> None:
    for n in sorted(set(weights)):
        if 0 <= n <= config.max_character_table_n:
            character_table(n, cache_dir=config.cache_dir)


def _parse_vector(text: str) -> GrowthVector:
    chunks = text.split(",")
    if len(chunks) != 4:
        raise ValueError(f"growth vector needs four components a,b,c,m, got {text!r}")
    return GrowthVector(*(int(c) for c in chunks))


# ---------------------------------------------------------------------------
# subcommands: each returns (stdout_text, outputs_for_report)


def cmd_kron(args: argparse.Namespace, config: Config) -> tuple[str, dict]:
    la, mu, nu = args.lam, args.mu, args.nu
    _warm(config, [weight(la)])
    value = kronecker(la, mu, nu, max_weight=config.max_character_table_n)
    return f"{value}\n", {"value": value}


def cmd_reduced(args: argparse.Namespace, config: Config) -> tuple[str, dict]:
    stats = weight(args.alpha) + weight(args.beta) + weight(args.gamma)
    firsts = sum(p[0] if p else 0 for p in (args.alpha, args.beta, args.gamma))
    _warm(config, list(range(stats + firsts + 1, min(stats + firsts + 4, config.max_character_table_n + 1))))
    value = reduced_kronecker(
        args.alpha, args.beta, args.gamma, max_weight=config.max_character_table_n
    )
    return f"{value}\n", {"value": value}


def cmd_bcoeff(args: argparse.Namespace, config: Config) -> tuple[str, dict]:
    caps = (weight(args.alpha), weight(args.beta), weight(args.gamma))
    _warm(config, list(range(max(caps) + 1)))
    value = b_coefficient(args.alpha, args.beta, args.gamma, form=args.form)
    if args.dump_series:
        series = (
            cached_theorem_series(caps) if args.form == "theorem" else b_series_hook_form(caps)
        )
        with open(args.dump_series, "w") as handle:
            json.dump(series_to_json(series.series), handle, indent=2, sort_keys=True)
    return f"{value}\n", {"value": value}


def cmd_bounds(args: argparse.Namespace, config: Config) -> tuple[str, dict]:
    alpha, beta, gamma = args.alpha, args.beta, args.gamma
    cols = column_bounds(alpha, beta, gamma)
    rows = row_bounds(alpha, beta, gamma)
    sharp = sharpness_predicate(alpha, beta, gamma)
    leading = leading_coefficient(alpha, beta, gamma)
    payload = {
        "alpha": format_partition(alpha),
        "beta": format_partition(beta),
        "gamma": format_partition(gamma),
        "columnBounds": {"k1": cols.k1, "k2": cols.k2, "k3": cols.k3},
        "rowBounds": {"k1": rows.k1, "k2": rows.k2, "k3": rows.k3},
        "sharp": sharp,
        "leadingCoefficient": [
            {"v": ev, "w": ew, "coefficient": c} for (ev, ew), c in sorted(leading.items())
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n", payload


def cmd_table(args: argparse.Namespace, config: Config) -> tuple[str, dict]:
    _warm(config, list(range(args.max_weight + 1)))
    rows = generate_table(args.max_weight)
    if args.diff_fixture:
        mismatches = diff_against_fixture(rows)
        payload = {
            "rows": len(rows),
            "mismatches": [str(m) for m in mismatches],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n", payload
    return render(rows, args.format), {"rows": len(rows), "format": args.format}


def cmd_scan(args: argparse.Namespace, config: Config) -> tuple[str, dict]:
    _warm(config, list(range(args.max_weight + 3)))
    report = scan_conjecture_510(
        args.max_weight, jobs=config.jobs, table_max=config.max_character_table_n
    )
    print(
        f"scanned {report.triples_checked} triples in {report.elapsed:.2f}s; "
        f"{len(report.counterexamples)} counterexample(s)",
        file=sys.stderr,
    )
    # stdout stays deterministic: the elapsed field is only materialized in
    # the report file and on stderr
    payload = report.to_json_dict(include_elapsed=False)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n", report.to_json_dict()


def cmd_stability(args: argparse.Namespace, config: Config) -> tuple[str, dict]:
    la, mu, nu = args.lam, args.mu, args.nu
    g = args.vector
    params = StabilityParams.from_triple(la, mu, nu, default_threshold)
    decomposition = semigroup_decompose(g)
    payload = {
        "lambda": format_partition(la),
        "mu": format_partition(mu),
        "nu": format_partition(nu),
        "vector": list(g),
        "inDom": dom_contains(la, mu, nu, g),
        "deltas": {
            "delta1": params.delta1,
            "delta2": params.delta2,
            "delta3": params.delta3,
            "delta": str(Fraction(params.delta)),
            "n0": params.n0,
        },
        "linearForms": list(linear_forms(g.a, g.b, g.c)),
        "semigroup": {
            "member": decomposition is not None,
            "decomposition": list(decomposition) if decomposition else None,
            "coneMember": growth_cone_contains(g),
            "parity": g.parity,
        },
        "grownTriple": [format_partition(p) for p in grown_triple(la, mu, nu, g)]
        if g.is_valid()
        else None,
        "grownInSetL4": setl4_contains(*grown_triple(la, mu, nu, g))
        if g.is_valid() and weight(la) + g.m >= 1
        else None,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n", payload


# ---------------------------------------------------------------------------
# wiring


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vector_arg(text: str) -> GrowthVector:
    try:
        return _parse_vector(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kronlab",
        description="Exact Kronecker-coefficient computations, stability checks, "
        "and coefficient tables",
    )
    parser.add_argument("--version", action="version", version=f"kronlab {__version__}")

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--cache-dir",
        default=None,
        help="character-table cache directory (default: $KRONLAB_CACHE_DIR or ~/.cache/kronlab)",
    )
    shared.add_argument("--no-cache", action="store_true", help="disable the disk cache")
    shared.add_argument(
        "--max-table-n",
        type=int,
        default=DEFAULT_MAX_WEIGHT,
        help="largest symmetric-group weight the character oracle may compute",
    )
    shared.add_argument("--jobs", type=int, default=1, help="worker processes for scans")
    shared.add_argument("--report", default=None, help="write a JSON run report to this file")

    sub = parser.add_subparsers(dest="command", required=True)

    kron = sub.add_parser(
        "kron", parents=[shared], help="Kronecker coefficient of three partitions"
    )
    kron.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    kron.add_argument("--mu", type=_partition_arg, required=True)
    kron.add_argument("--nu", type=_partition_arg, required=True)
    kron.set_defaults(handler=cmd_kron)

    reduced = sub.add_parser("reduced", parents=[shared], help="reduced (stable) Kronecker coefficient")
    for name in ("--alpha", "--beta", "--gamma"):
        reduced.add_argument(name, type=_partition_arg, required=True)
    reduced.set_defaults(handler=cmd_reduced)

    bcoeff = sub.add_parser("bcoeff", parents=[shared], help="B coefficient from the generating series")
    for name in ("--alpha", "--beta", "--gamma"):
        bcoeff.add_argument(name, type=_partition_arg, required=True)
    bcoeff.add_argument("--form", choices=("theorem", "hook"), default="theorem")
    bcoeff.add_argument("--dump-series", default=None, help="write the series JSON here")
    bcoeff.set_defaults(handler=cmd_bcoeff)

    bounds = sub.add_parser("bounds", parents=[shared], help="degree bounds and sharpness for a triple")
    for name in ("--alpha", "--beta", "--gamma"):
        bounds.add_argument(name, type=_partition_arg, required=True)
    bounds.set_defaults(handler=cmd_bounds)

    table = sub.add_parser("table", parents=[shared], help="generate the B-coefficient table")
    table.add_argument("--max-weight", type=int, default=3)
    table.add_argument("--format", choices=RENDER_FORMATS, default="csv")
    table.add_argument(
        "--diff-fixture",
        action="store_true",
        help="compare against the shipped reference fixture instead of rendering",
    )
    table.set_defaults(handler=cmd_table)

    scan = sub.add_parser(
        "scan-conjecture", parents=[shared], help="exhaustive growth-monotonicity counterexample scan"
    )
    scan.add_argument("--max-weight", type=int, default=5)
    scan.set_defaults(handler=cmd_scan)

    stability = sub.add_parser("stability", parents=[shared], help="region membership for a growth vector")
    stability.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    stability.add_argument("--mu", type=_partition_arg, required=True)
    stability.add_argument("--nu", type=_partition_arg, required=True)
    stability.add_argument("--vector", type=_vector_arg, required=True, metavar="a,b,c,m")
    stability.set_defaults(handler=cmd_stability)

    return parser


def _write_report(path: str, command: str, inputs: dict, outputs: dict, elapsed_ms: float) -> None:
    stats = cache_stats()
    report = {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "elapsed_ms": elapsed_ms,
        "cache": {"hits": stats["hits"], "misses": stats["misses"]},
        "version": __version__,
    }
    with open(path, "w") as handle:
        json.dump(report, handle, indent=2, sort_keys=True, default=str)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = Config(
            max_character_table_n=args.max_table_n,
            cache_dir=None if args.no_cache else (args.cache_dir or default_cache_dir()),
            jobs=args.jobs,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "format", None):
        config.output_format = args.format
    started = time.monotonic()
    try:
        stdout_text, outputs = args.handler(args, config)
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(stdout_text)
    if args.report:
        inputs = {
            key: value
            for key, value in vars(args).items()
            if key not in ("handler", "report") and value is not None
        }
        _write_report(
            args.report,
            args.command,
            {k: str(v) for k, v in inputs.items()},
            outputs,
            (time.monotonic() - started) * 1000.0,
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
