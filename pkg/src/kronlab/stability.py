"""Growth-stability regions, the four-generator semigroup, and the
monotonicity machinery for Kronecker coefficients.

Conventions.  A growth vector (a, b, c, m) with m >= a, b, c grows a
triple (la, mu, nu) of common weight N to

    (la op(m-a, a), mu op(m-b, b), nu op(m-c, c)),

where op(x, y) adds x boxes to the first row and y to the first column.
All region arithmetic is exact; the half-integral threshold delta is kept
as a Fraction.

The set L4 is carved out by four inequalities on a triple of weight N with
N0 = N0(la-hat, mu-hat, nu-hat) evaluated on the first-hook-stripped
partitions:

    N >= N0 + (la'_1 + mu'_1 + nu'_1)/2        and the three variants
    N >= N0 + (la_1  + mu_1  + nu'_1)/2        obtained by swapping a
    N >= N0 + (la_1  + mu'_1 + nu_1)/2         first-row statistic for a
    N >= N0 + (la'_1 + mu_1  + nu_1)/2         first-column one.

Dom(la, mu, nu) collects the growth vectors whose grown triple lands in
L4; eliminating the grown statistics turns the four inequalities into
linear-form thresholds in (a, b, c, m), which is what ``dom_contains``
evaluates.

N0 itself is not computable here; a pluggable ThresholdFunction stands in
for it.  The default is deliberately simple and is trusted only as far as
the empirical two-value suite validates it.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .kronecker import (
    DEFAULT_MAX_WEIGHT,
    GrowthVector,
    grown_triple,
    kronecker,
)
from .partitions import (
    Partition,
    first_column,
    first_part,
    format_partition,
    partitions_of,
    remove_first_row_and_column,
    weight,
)

ThresholdFunction = Callable[[Partition, Partition, Partition], int]


def default_threshold(la_hat: Partition, mu_hat: Partition, nu_hat: Partition) -> int:
    """Stand-in stabilization threshold: total weight plus total first part
    of the three (already first-hook-stripped) partitions."""
    return (
        weight(la_hat)
        + weight(mu_hat)
        + weight(nu_hat)
        + first_part(la_hat)
        + first_part(mu_hat)
        + first_part(nu_hat)
    )


def linear_forms(a: int, b: int, c: int) -> tuple[int, int, int]:
    """(l1, l2, l3) = (-a+b+c, a-b+c, a+b-c); note l1+l2 = 2c, l1+l3 = 2b,
    l2+l3 = 2a."""
    return (-a + b + c, a - b + c, a + b - c)


@dataclass(frozen=True)
class StabilityParams:
    """The thresholds cutting out Dom for a fixed base triple."""

    n: int
    n0: int
    delta1: int
    delta2: int
    delta3: int
    delta: Fraction

    @classmethod
    def from_triple(
        cls,
        la: Partition,
        mu: Partition,
        nu: Partition,
        threshold: ThresholdFunction = default_threshold,
    ) -> "StabilityParams":
        n = weight(la)
        n0 = threshold(
            remove_first_row_and_column(la),
            remove_first_row_and_column(mu),
            remove_first_row_and_column(nu),
        )
        lc, mc, nc = first_column(la), first_column(mu), first_column(nu)
        lp, mp, np_ = first_part(la), first_part(mu), first_part(nu)
        return cls(
            n=n,
            n0=n0,
            delta1=2 * (n0 - n) + lc + mp + np_,
            delta2=2 * (n0 - n) + lp + mc + np_,
            delta3=2 * (n0 - n) + lp + mp + nc,
            delta=Fraction(2 * (n0 - n) + lc + mc + nc, 2),
        )


def setl4_contains(
    la: Partition,
    mu: Partition,
    nu: Partition,
    threshold: ThresholdFunction = default_threshold,
) -> bool:
    """Membership in L4: the four half-sum inequalities above, evaluated
    directly on the triple (equal weights, N >= 1)."""
    n = weight(la)
    if not (n == weight(mu) == weight(nu)):
        raise ValueError(f"weights differ: {la}, {mu}, {nu}")
    if n < 1:
        raise ValueError("L4 is defined for non-empty partitions")
    n0 = threshold(
        remove_first_row_and_column(la),
        remove_first_row_and_column(mu),
        remove_first_row_and_column(nu),
    )
    lc, mc, nc = first_column(la), first_column(mu), first_column(nu)
    lp, mp, np_ = first_part(la), first_part(mu), first_part(nu)
    two_n = 2 * (n - n0)
    return (
        two_n >= lc + mc + nc
        and two_n >= lp + mp + nc
        and two_n >= lp + mc + np_
        and two_n >= lc + mp + np_
    )


def dom_contains(
    la: Partition,
    mu: Partition,
    nu: Partition,
    g: GrowthVector,
    threshold: ThresholdFunction = default_threshold,
) -> bool:
    """Membership of the growth vector in Dom(la, mu, nu): the linear
    forms clear their deltas, m - (a+b+c)/2 clears delta, and m >= a, b, c.
    All comparisons are non-strict."""
    g = GrowthVector(*g)
    if min(g) < 0 or not g.is_valid():
        return False
    params = StabilityParams.from_triple(la, mu, nu, threshold)
    l1, l2, l3 = linear_forms(g.a, g.b, g.c)
    if l1 < params.delta1 or l2 < params.delta2 or l3 < params.delta3:
        return False
    return Fraction(2 * g.m - (g.a + g.b + g.c), 2) >= params.delta


def dom_sample(
    la: Partition,
    mu: Partition,
    nu: Partition,
    max_m: int,
    threshold: ThresholdFunction = default_threshold,
) -> list[GrowthVector]:
    """All Dom vectors with m <= max_m, in lexicographic (m, a, b, c) order."""
    out = []
    for m in range(max_m + 1):
        for a in range(m + 1):
            for b in range(m + 1):
                for c in range(m + 1):
                    g = GrowthVector(a, b, c, m)
                    if dom_contains(la, mu, nu, g, threshold):
                        out.append(g)
    return out


# ---------------------------------------------------------------------------
# the four-generator semigroup

U1 = GrowthVector(1, 1, 0, 1)
U2 = GrowthVector(1, 0, 1, 1)
U3 = GrowthVector(0, 1, 1, 1)
U4 = GrowthVector(0, 0, 0, 1)
GENERATORS: tuple[GrowthVector, ...] = (U1, U2, U3, U4)

DIAGONAL_HOOK_STEP = GrowthVector(1, 1, 1, 2)


def semigroup_decompose(g: GrowthVector) -> tuple[int, int, int, int] | None:
    """Multiplicities (x1, x2, x3, x4) with sum x_i u_i = g, or None.

    The first three coordinates force x1 = (a+b-c)/2, x2 = (a-b+c)/2,
    x3 = (-a+b+c)/2, so membership reduces to those being nonnegative
    integers and x4 = m - (a+b+c)/2 >= 0.
    """
    g = GrowthVector(*g)
    if min(g) < 0:
        return None
    total = g.a + g.b + g.c
    if total % 2:
        return None
    x1, x2, x3 = ((s // 2) for s in ((g.a + g.b - g.c), (g.a - g.b + g.c), (-g.a + g.b + g.c)))
    x4 = g.m - total // 2
    if min(x1, x2, x3, x4) < 0:
        return None
    return (x1, x2, x3, x4)


def semigroup_member(g: GrowthVector) -> bool:
    return semigroup_decompose(g) is not None


def growth_cone_contains(g: GrowthVector) -> bool:
    """The parity-free hull of the semigroup: the triangle inequalities on
    (a, b, c) plus 2m >= a+b+c.  Its integer points split into the
    semigroup (even a+b+c) and its translate by (1, 1, 1, 2) (odd)."""
    g = GrowthVector(*g)
    if min(g) < 0:
        return False
    l1, l2, l3 = linear_forms(g.a, g.b, g.c)
    return l1 >= 0 and l2 >= 0 and l3 >= 0 and 2 * g.m >= g.a + g.b + g.c


def vector_sub(g: GrowthVector, h: GrowthVector) -> GrowthVector:
    return GrowthVector(g.a - h.a, g.b - h.b, g.c - h.c, g.m - h.m)


# ---------------------------------------------------------------------------
# the two-value verification


class TwoValueViolation(Exception):
    """Raised when a Dom sample shows more than one coefficient value on a
    single parity class; the witnesses identify the conflict."""

    def __init__(
        self,
        triple: tuple[Partition, Partition, Partition],
        first: tuple[GrowthVector, int],
        second: tuple[GrowthVector, int],
    ):
        self.triple = triple
        self.first = first
        self.second = second
        names = ",".join(format_partition(p) for p in triple)
        super().__init__(
            f"two-value check failed on ({names}): vector {tuple(first[0])} gives "
            f"{first[1]} but vector {tuple(second[0])} gives {second[1]} "
            "(same parity of a+b+c)"
        )


@dataclass(frozen=True)
class TwoValues:
    even: int | None
    odd: int | None


def two_value_check(
    la: Partition,
    mu: Partition,
    nu: Partition,
    region: Iterable[GrowthVector],
    max_weight: int = DEFAULT_MAX_WEIGHT,
) -> TwoValues:
    """Evaluate the grown coefficient on every vector of ``region`` and
    assert it only depends on the parity of a+b+c; returns the value per
    parity class (None where the class is empty)."""
    seen: dict[int, tuple[GrowthVector, int]] = {}
    for g in region:
        g = GrowthVector(*g)
        value = kronecker(*grown_triple(la, mu, nu, g), max_weight=max_weight)
        previous = seen.get(g.parity)
        if previous is None:
            seen[g.parity] = (g, value)
        elif previous[1] != value:
            raise TwoValueViolation((la, mu, nu), previous, (g, value))
    return TwoValues(
        even=seen[0][1] if 0 in seen else None,
        odd=seen[1][1] if 1 in seen else None,
    )


# ---------------------------------------------------------------------------
# growth-monotonicity scan


@dataclass(frozen=True)
class Counterexample:
    la: Partition
    mu: Partition
    nu: Partition
    value: int
    grown_value: int

    def to_json_dict(self) -> dict:
        grown = grown_triple(self.la, self.mu, self.nu, DIAGONAL_HOOK_STEP)
        return {
            "lambda": format_partition(self.la),
            "mu": format_partition(self.mu),
            "nu": format_partition(self.nu),
            "weight": weight(self.la),
            "growthVector": list(DIAGONAL_HOOK_STEP),
            "value": self.value,
            "grownValue": self.grown_value,
            "grownTriple": [format_partition(p) for p in grown],
            "provenance": "character-sum oracle (Murnaghan-Nakayama tables)",
        }


@dataclass
class ScanReport:
    max_weight: int
    triples_checked: int
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0

    def to_json_dict(self, include_elapsed: bool = True) -> dict:
        return {
            "maxWeight": self.max_weight,
            "triplesChecked": self.triples_checked,
            "counterexamples": [c.to_json_dict() for c in self.counterexamples],
            "elapsed": self.elapsed if include_elapsed else None,
        }


def _sorted_triples(n: int) -> list[tuple[Partition, Partition, Partition]]:
    parts = partitions_of(n)
    return [
        (la, mu, nu)
        for i, la in enumerate(parts)
        for j, mu in enumerate(parts[i:], i)
        for nu in parts[j:]
    ]


def _check_diagonal_step(
    triple: tuple[Partition, Partition, Partition], max_weight: int
) -> Counterexample | None:
    la, mu, nu = triple
    value = kronecker(la, mu, nu, max_weight=max_weight)
    grown_value = kronecker(
        *grown_triple(la, mu, nu, DIAGONAL_HOOK_STEP), max_weight=max_weight
    )
    if value > grown_value:
        return Counterexample(la, mu, nu, value, grown_value)
    return None


def _scan_chunk(
    args: tuple[list[tuple[Partition, Partition, Partition]], int],
) -> list[Counterexample]:
    triples, max_weight = args
    return [ce for t in triples if (ce := _check_diagonal_step(t, max_weight)) is not None]


def scan_conjecture_510(
    max_weight: int,
    jobs: int = 1,
    table_max: int = DEFAULT_MAX_WEIGHT,
) -> ScanReport:
    """Exhaustively test value <= grown value under the (1,1,1,2) diagonal
    hook step on all equal-weight triples of weight 1..max_weight.

    Both coefficients are symmetric under permuting the triple, so only
    sorted triples are enumerated.  Findings are data, not errors: they are
    returned in the report.
    """
    if max_weight + 2 > table_max:
        raise ValueError(
            f"scan needs character tables up to weight {max_weight + 2}, "
            f"above the configured maximum {table_max}"
        )
    start = time.monotonic()
    triples = [t for n in range(1, max_weight + 1) for t in _sorted_triples(n)]
    findings: list[Counterexample] = []
    if jobs <= 1 or len(triples) < 2:
        for triple in triples:
            ce = _check_diagonal_step(triple, table_max)
            if ce is not None:
                findings.append(ce)
    else:
        chunk = max(1, (len(triples) + jobs - 1) // jobs)
        pieces = [triples[i : i + chunk] for i in range(0, len(triples), chunk)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(_scan_chunk, [(piece, table_max) for piece in pieces]):
                findings.extend(result)
    findings.sort(key=lambda c: (weight(c.la), c.la, c.mu, c.nu))
    return ScanReport(
        max_weight=max_weight,
        triples_checked=len(triples),
        counterexamples=findings,
        elapsed=time.monotonic() - start,
    )


# ---------------------------------------------------------------------------
# monotone chains: semigroup moves with their justifications

MOVE_KINDS: dict[GrowthVector, str] = {
    U1: "murnaghan-conjugated-12",
    U2: "murnaghan-conjugated-13",
    U3: "murnaghan-conjugated-23",
    U4: "murnaghan",
    DIAGONAL_HOOK_STEP: "diagonal-hook-step",
}


@dataclass(frozen=True)
class Move:
    kind: str
    generator: GrowthVector
    before: tuple[Partition, Partition, Partition]
    after: tuple[Partition, Partition, Partition]
    value_before: int | None
    value_after: int | None
    verified: bool

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "generator": list(self.generator),
            "before": [format_partition(p) for p in self.before],
            "after": [format_partition(p) for p in self.after],
            "valueBefore": self.value_before,
            "valueAfter": self.value_after,
            "verified": self.verified,
        }


def monotone_chain(
    la: Partition,
    mu: Partition,
    nu: Partition,
    g: GrowthVector,
    verify_up_to: int = DEFAULT_MAX_WEIGHT,
) -> list[Move]:
    """Decompose the growth vector into single-generator moves, each
    labeled with the argument that justifies its inequality: a plain
    first-row growth step, a conjugation-transported one, or the
    conjectural diagonal hook step when the parity is odd.

    Every move whose grown weight stays within ``verify_up_to`` is checked
    numerically against the character oracle; a failed check raises.
    """
    g = GrowthVector(*g)
    if not g.is_valid():
        raise ValueError(f"invalid growth vector {tuple(g)}")
    steps: list[GrowthVector] = []
    decomposition = semigroup_decompose(g)
    if decomposition is None:
        shifted = vector_sub(g, DIAGONAL_HOOK_STEP)
        decomposition = semigroup_decompose(shifted)
        if decomposition is None:
            raise ValueError(
                f"{tuple(g)} is in neither the move semigroup nor its "
                "diagonal-step translate"
            )
        steps.append(DIAGONAL_HOOK_STEP)
    for generator, count in zip(GENERATORS, decomposition):
        steps.extend([generator] * count)

    moves: list[Move] = []
    current = (tuple(la), tuple(mu), tuple(nu))
    for step in steps:
        after = grown_triple(*current, step)
        can_verify = weight(after[0]) <= verify_up_to
        value_before = value_after = None
        if can_verify:
            value_before = kronecker(*current, max_weight=verify_up_to)
            value_after = kronecker(*after, max_weight=verify_up_to)
            if value_before > value_after:
                raise AssertionError(
                    f"monotonicity failed on {current} -> {after}: "
                    f"{value_before} > {value_after}"
                )
        moves.append(
            Move(
                kind=MOVE_KINDS[step],
                generator=step,
                before=current,
                after=after,
                value_before=value_before,
                value_after=value_after,
                verified=can_verify,
            )
        )
        current = after
    return moves
