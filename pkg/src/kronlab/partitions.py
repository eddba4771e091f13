"""Integer partitions and the row/column growth operator.

A partition is stored as a tuple of weakly decreasing positive integers;
the empty partition is ``()``.  Tuples give structural equality cheaply
and are hashable, which the coefficient caches rely on.  Trailing zeros
are never stored.

The text syntax used by the CLI, JSON dumps and fixture files is the
comma-separated part list: ``2,1,1``; the empty partition reads/prints
as ``-`` (an empty string is also accepted on input).
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]

EMPTY: Partition = ()


class HookCoords(NamedTuple):
    """A hook written in arm/leg coordinates: (a|b) = (a+1, 1^b)."""

    arm: int
    leg: int

    def as_partition(self) -> Partition:
        return (self.arm + 1,) + (1,) * self.leg

    @property
    def weight(self) -> int:
        return self.arm + self.leg + 1


class GrowthStep(NamedTuple):
    """One application of the growth operator: add ``row_add`` boxes to
    the first row and ``col_add`` boxes to the first column."""

    row_add: int
    col_add: int


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize ``parts`` into a partition tuple.

    >>> partition([3, 1])
    (3, 1)
    >>> partition([])
    ()
    """
    t = tuple(int(p) for p in parts)
    for i, p in enumerate(t):
        if p <= 0:
            raise ValueError(f"partition parts must be positive, got {p}")
        if i and t[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {t}")
    return t


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text syntax; ``-`` or '' is empty."""
    text = text.strip()
    if text in ("", "-"):
        return EMPTY
    try:
        return partition(int(chunk) for chunk in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None


def format_partition(la: Partition) -> str:
    return ",".join(str(p) for p in la) if la else "-"


def weight(la: Partition) -> int:
    return sum(la)


def length(la: Partition) -> int:
    return len(la)


def first_part(la: Partition) -> int:
    """lambda_1, with the convention that it is 0 for the empty partition."""
    return la[0] if la else 0


def first_column(la: Partition) -> int:
    """lambda'_1 = number of parts."""
    return len(la)


def conjugate(la: Partition) -> Partition:
    """Transpose the Young diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    >>> conjugate(())
    ()
    """
    if not la:
        return EMPTY
    cols = [0] * la[0]
    for p in la:
        for j in range(p):
            cols[j] += 1
    return tuple(cols)


def is_hook(la: Partition) -> bool:
    """True iff the diagram is a hook (a+1, 1^b); the empty partition is not."""
    return bool(la) and all(p == 1 for p in la[1:])


def hook_coords(la: Partition) -> HookCoords:
    if not is_hook(la):
        raise ValueError(f"{la} is not a hook")
    return HookCoords(arm=la[0] - 1, leg=len(la) - 1)


def grow(la: Partition, step: GrowthStep | tuple[int, int]) -> Partition:
    """Add ``row_add`` boxes to the first row and ``col_add`` boxes to the
    first column; the weight always increases by ``row_add + col_add``.

    For the empty partition the new boxes form the hook (x, 1^y), with
    (0, 1^y) read as the single column (1^y).

    >>> grow((2, 1), GrowthStep(3, 2))
    (5, 1, 1, 1)
    >>> grow((), GrowthStep(2, 1))
    (2, 1)
    """
    x, y = step
    if x < 0 or y < 0:
        raise ValueError("growth amounts must be nonnegative")
    head = first_part(la) + x
    body = la[1:] if la else ()
    tail = (1,) * y
    return ((head,) + body + tail) if head else tail


def remove_first_row(la: Partition) -> Partition:
    """(lambda_2, lambda_3, ...); the Murnaghan normalization."""
    return la[1:]


def remove_first_column(la: Partition) -> Partition:
    return tuple(p - 1 for p in la if p > 1)


def remove_first_row_and_column(la: Partition) -> Partition:
    """Strip the full first hook: drop row one, then column one of the rest."""
    return remove_first_column(la[1:])


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order.

    >>> partitions_of(3)
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_iter_partitions(n, n))


def _iter_partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield EMPTY
        return
    for head in range(min(n, largest), 0, -1):
        for rest in _iter_partitions(n - head, head):
            yield (head,) + rest


@cache
def partitions_up_to(max_weight: int) -> tuple[Partition, ...]:
    """All partitions with weight <= max_weight, in degree-lex order
    (weight ascending, lexicographically descending within a weight)."""
    out: list[Partition] = []
    for n in range(max_weight + 1):
        out.extend(partitions_of(n))
    return tuple(out)


def dominates_lex(la: Partition, mu: Partition) -> bool:
    """Plain lexicographic comparison la >= mu, absent parts read as 0.

    Tuple comparison implements this directly because parts are positive.
    """
    return la >= mu


def count_partitions(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence (independent of the
    enumeration above; used to cross-check it)."""
    if n < 0:
        return 0
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 else -1
            if g1 <= m:
                total += sign * table[m - g1]
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return table[n]
