"""Reference coefficient tables: generation, rendering, and regression diff.

The shipped fixture ``data/coefficient_tables.csv`` freezes the reference
values for every triple (alpha, beta, gamma) of partitions of weight at
most 3 with alpha >= beta >= gamma lexicographically, listed degree-lex
(weight ascending, lexicographically descending within a weight).  Its
three B columns are what this library recomputes; the SSK, A and C columns
ride along for completeness but nothing here claims them (the ``verified``
marker is ``b`` on every row for that reason).
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass
from importlib import resources

from .genfunc import BSeries, cached_theorem_series
from .partitions import Partition, format_partition, parse_partition, partitions_up_to

FIXTURE_RESOURCE = "coefficient_tables.csv"

# guards the read-only reference data against accidental edits
FIXTURE_SHA256 = "d9b607098acd765027c90abea9b54396999a6a0c632ac9361d38b9bb6f03a069"

RENDER_FORMATS = ("csv", "json", "latex")


@dataclass(frozen=True)
class TableRow:
    alpha: Partition
    beta: Partition
    gamma: Partition
    b_abc: int
    b_bac: int
    b_gab: int

    @property
    def key(self) -> tuple[Partition, Partition, Partition]:
        return (self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class FixtureRow:
    alpha: Partition
    beta: Partition
    gamma: Partition
    ssk: int
    a: int
    b_abc: int
    b_bac: int
    b_gab: int
    c: int
    verified: str

    def b_row(self) -> TableRow:
        return TableRow(self.alpha, self.beta, self.gamma, self.b_abc, self.b_bac, self.b_gab)


@dataclass(frozen=True)
class Mismatch:
    key: tuple[Partition, Partition, Partition]
    column: str
    expected: int
    actual: int

    def __str__(self) -> str:
        names = ",".join(format_partition(p) for p in self.key)
        return f"({names}) {self.column}: expected {self.expected}, got {self.actual}"


def table_keys(max_weight: int) -> list[tuple[Partition, Partition, Partition]]:
    """Row keys: alpha >= beta >= gamma lexicographically, each of weight
    <= max_weight, in the degree-lex listing order."""
    parts = partitions_up_to(max_weight)
    return [
        (alpha, beta, gamma)
        for alpha in parts
        for beta in parts
        if beta <= alpha
        for gamma in parts
        if gamma <= beta
    ]


def generate_table(max_weight: int, series: BSeries | None = None) -> list[TableRow]:
    """Compute the three B columns for every table key."""
    if series is None:
        series = cached_theorem_series((max_weight, max_weight, max_weight))
    rows = []
    for alpha, beta, gamma in table_keys(max_weight):
        rows.append(
            TableRow(
                alpha=alpha,
                beta=beta,
                gamma=gamma,
                b_abc=series.coefficient(alpha, beta, gamma),
                b_bac=series.coefficient(beta, alpha, gamma),
                b_gab=series.coefficient(gamma, alpha, beta),
            )
        )
    return rows


def load_fixture() -> list[FixtureRow]:
    text = resources.files("kronlab").joinpath("data", FIXTURE_RESOURCE).read_text()
    digest = hashlib.sha256(text.encode()).hexdigest()
    if digest != FIXTURE_SHA256:
        raise ValueError(
            f"reference fixture checksum mismatch: {digest}; the shipped table "
            "data must not be edited"
        )
    out = []
    for record in csv.DictReader(io.StringIO(text)):
        out.append(
            FixtureRow(
                alpha=parse_partition(record["alpha"]),
                beta=parse_partition(record["beta"]),
                gamma=parse_partition(record["gamma"]),
                ssk=int(record["ssk"]),
                a=int(record["a"]),
                b_abc=int(record["b_abc"]),
                b_bac=int(record["b_bac"]),
                b_gab=int(record["b_gab"]),
                c=int(record["c"]),
                verified=record["verified"],
            )
        )
    return out


def diff_against_fixture(
    rows: list[TableRow], fixture: list[FixtureRow] | None = None
) -> list[Mismatch]:
    """Compare computed B columns against the fixture; empty means exact
    agreement.  Generated rows must cover every fixture key."""
    if fixture is None:
        fixture = load_fixture()
    by_key = {row.key: row for row in rows}
    mismatches = []
    for expected in fixture:
        key = (expected.alpha, expected.beta, expected.gamma)
        actual = by_key.get(key)
        if actual is None:
            raise ValueError(f"generated rows do not cover fixture key {key}")
        for column in ("b_abc", "b_bac", "b_gab"):
            want = getattr(expected, column)
            got = getattr(actual, column)
            if want != got:
                mismatches.append(Mismatch(key, column, want, got))
    return mismatches


def render(rows: list[TableRow], fmt: str) -> str:
    """Deterministic text rendering; ``fmt`` is csv, json or latex."""
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["alpha", "beta", "gamma", "b_abc", "b_bac", "b_gab"])
        for row in rows:
            writer.writerow(
                [
                    format_partition(row.alpha),
                    format_partition(row.beta),
                    format_partition(row.gamma),
                    row.b_abc,
                    row.b_bac,
                    row.b_gab,
                ]
            )
        return buffer.getvalue()
    if fmt == "json":
        return json.dumps(
            [
                {
                    "alpha": format_partition(row.alpha),
                    "beta": format_partition(row.beta),
                    "gamma": format_partition(row.gamma),
                    "b_abc": row.b_abc,
                    "b_bac": row.b_bac,
                    "b_gab": row.b_gab,
                }
                for row in rows
            ],
            indent=2,
        )
    if fmt == "latex":
        lines = []
        for row in rows:
            cells = [_latex_partition(p) for p in row.key]
            cells += [str(row.b_abc), str(row.b_bac), str(row.b_gab)]
            lines.append(" & ".join(cells) + r" \\")
        return "\n".join(lines) + ("\n" if lines else "")
    raise ValueError(f"unknown table format {fmt!r}; expected one of {RENDER_FORMATS}")


def _latex_partition(la: Partition) -> str:
    if not la:
        return r"\ep"
    return "(" + ", ".join(str(p) for p in la) + ")"


def parse_csv(text: str) -> list[TableRow]:
    """Inverse of ``render(..., "csv")``."""
    out = []
    for record in csv.DictReader(io.StringIO(text)):
        out.append(
            TableRow(
                alpha=parse_partition(record["alpha"]),
                beta=parse_partition(record["beta"]),
                gamma=parse_partition(record["gamma"]),
                b_abc=int(record["b_abc"]),
                b_bac=int(record["b_bac"]),
                b_gab=int(record["b_gab"]),
            )
        )
    return out
