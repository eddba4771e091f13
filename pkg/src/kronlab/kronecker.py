"""Kronecker coefficients from symmetric-group character sums.

g(la, mu, nu) = sum over cycle types rho of chi^la(rho) chi^mu(rho)
chi^nu(rho) / z_rho.  This is the slow but trustworthy route: no
recursions beyond Murnaghan-Nakayama, every value an exact integer.

The module also provides the internal product of Schur functions, the
growth operator applied to coefficient arguments, reduced Kronecker
coefficients found by windowed stabilization, and a generic stabilization
detector for integer sequences.
"""

from __future__ import annotations

from functools import cache
from math import factorial
from typing import NamedTuple, Sequence

from .characters import centralizer_order, character
from .errors import ResourceLimitError
from .partitions import GrowthStep, Partition, grow, partitions_of, weight

DEFAULT_MAX_WEIGHT = 14

STABILIZATION_WINDOW = 3


class GrowthVector(NamedTuple):
    """(a, b, c, m): grow the three arguments by op(m-a, a), op(m-b, b),
    op(m-c, c); valid only when m >= a, b, c."""

    a: int
    b: int
    c: int
    m: int

    def is_valid(self) -> bool:
        return (
            min(self.a, self.b, self.c, self.m) >= 0
            and self.m >= self.a
            and self.m >= self.b
            and self.m >= self.c
        )

    @property
    def parity(self) -> int:
        return (self.a + self.b + self.c) % 2


def _check_weight_guard(n: int, max_weight: int) -> None:
    if n > max_weight:
        raise ResourceLimitError(
            f"weight {n} exceeds the configured character-table maximum {max_weight}"
        )


@cache
def _kronecker_sorted(la: Partition, mu: Partition, nu: Partition) -> int:
    n = weight(la)
    nfact = factorial(n)
    total = 0
    for rho in partitions_of(n):
        prod = character(la, rho) * character(mu, rho) * character(nu, rho)
        if prod:
            total += prod * (nfact // centralizer_order(rho))
    value, remainder = divmod(total, nfact)
    if remainder:
        raise AssertionError(f"non-integral character sum for {(la, mu, nu)}")
    return value


def kronecker(
    la: Partition, mu: Partition, nu: Partition, max_weight: int = DEFAULT_MAX_WEIGHT
) -> int:
    """The Kronecker coefficient g(la, mu, nu); arguments must share a weight."""
    if not (weight(la) == weight(mu) == weight(nu)):
        raise ValueError(f"weights differ: {la}, {mu}, {nu}")
    _check_weight_guard(weight(la), max_weight)
    ordered = tuple(sorted((la, mu, nu), reverse=True))
    return _kronecker_sorted(*ordered)


def internal_product(
    la: Partition, mu: Partition, max_weight: int = DEFAULT_MAX_WEIGHT
) -> dict[Partition, int]:
    """Expansion of the internal (Kronecker) product s_la * s_mu in the
    Schur basis, as a partition -> coefficient mapping without zeros."""
    if weight(la) != weight(mu):
        raise ValueError(f"weights differ: {la}, {mu}")
    _check_weight_guard(weight(la), max_weight)
    out: dict[Partition, int] = {}
    for nu in partitions_of(weight(la)):
        g = kronecker(la, mu, nu, max_weight=max_weight)
        if g:
            out[nu] = g
    return out


def hook_grown_kronecker(
    la: Partition,
    mu: Partition,
    nu: Partition,
    g: GrowthVector,
    max_weight: int = DEFAULT_MAX_WEIGHT,
) -> int:
    """g of the triple grown by op(m-a, a), op(m-b, b), op(m-c, c)."""
    g = GrowthVector(*g)
    if not g.is_valid():
        raise ValueError(f"invalid growth vector {g}: needs m >= a, b, c >= 0")
    grown = grown_triple(la, mu, nu, g)
    return kronecker(*grown, max_weight=max_weight)


def grown_triple(
    la: Partition, mu: Partition, nu: Partition, g: GrowthVector
) -> tuple[Partition, Partition, Partition]:
    return (
        grow(la, GrowthStep(g.m - g.a, g.a)),
        grow(mu, GrowthStep(g.m - g.b, g.b)),
        grow(nu, GrowthStep(g.m - g.c, g.c)),
    )


class StabilizationResult(NamedTuple):
    found: bool
    onset: int | None
    value: int | None


def stabilization_onset(
    values: Sequence[int], window: int = STABILIZATION_WINDOW, start: int = 0
) -> StabilizationResult:
    """Least index (offset by ``start``) at which the next ``window``
    values are all equal, together with that value.

    >>> stabilization_onset([0, 0, 1, 1, 1, 1], window=3)
    StabilizationResult(found=True, onset=2, value=1)
    """
    if window < 1:
        raise ValueError("window must be positive")
    for i in range(len(values) - window + 1):
        chunk = values[i : i + window]
        if all(v == chunk[0] for v in chunk):
            return StabilizationResult(True, start + i, chunk[0])
    return StabilizationResult(False, None, None)


def _padded(alpha: Partition, n: int) -> Partition:
    head = n - weight(alpha)
    if alpha and head < alpha[0]:
        raise ValueError(f"cannot prepend a first part of {head} to {alpha}")
    return ((head,) + alpha) if head else alpha


def reduced_kronecker(
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    max_weight: int = DEFAULT_MAX_WEIGHT,
) -> int:
    """Stable value of g((n-|alpha|, alpha), (n-|beta|, beta), (n-|gamma|, gamma)).

    Evaluation starts at n = |alpha|+|beta|+|gamma|+alpha_1+beta_1+gamma_1+1
    and requires three consecutive equal values; if the window disagrees it
    slides forward, failing loudly once the weight guard is reached.
    """
    stats = weight(alpha) + weight(beta) + weight(gamma)
    firsts = (alpha[0] if alpha else 0) + (beta[0] if beta else 0) + (gamma[0] if gamma else 0)
    n0 = stats + firsts + 1
    window = STABILIZATION_WINDOW
    if n0 + window - 1 > max_weight:
        raise ResourceLimitError(
            f"stabilization window for {alpha},{beta},{gamma} needs weight "
            f"{n0 + window - 1}, above the configured maximum {max_weight}"
        )
    values = [
        kronecker(_padded(alpha, n), _padded(beta, n), _padded(gamma, n), max_weight=max_weight)
        for n in range(n0, n0 + window)
    ]
    n = n0 + window - 1
    while len(set(values[-window:])) != 1:
        n += 1
        if n > max_weight:
            raise ResourceLimitError(
                f"no stabilization for {alpha},{beta},{gamma} within weight {max_weight}; "
                f"values from n={n0}: {values}"
            )
        values.append(
            kronecker(_padded(alpha, n), _padded(beta, n), _padded(gamma, n), max_weight=max_weight)
        )
    return values[-1]
