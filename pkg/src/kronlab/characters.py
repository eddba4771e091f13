"""Irreducible symmetric-group characters via the Murnaghan-Nakayama rule.

Characters are computed by border-strip removal on beta-sets (first-column
hook lengths): removing a strip of length t from the partition encoded by
the beta-set B means replacing some b in B by b - t, with sign (-1)^h where
h counts the elements of B strictly between b - t and b.

Everything is exact integer arithmetic.  Values are memoized in a shared
dictionary that full-table computation and the optional JSON disk cache
both feed, so warm starts skip the recursion entirely.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass
from functools import cache
from math import factorial

from .partitions import Partition, conjugate, format_partition, parse_partition, partitions_of

CACHE_FORMAT_VERSION = 1


@cache
def _beta_set(la: Partition) -> tuple[int, ...]:
    n = len(la)
    return tuple(la[i] + (n - 1 - i) for i in range(n))


def _partition_from_beta(beta: tuple[int, ...]) -> Partition:
    desc = sorted(beta, reverse=True)
    n = len(desc)
    return tuple(p for i, b in enumerate(desc) if (p := b - (n - 1 - i)) > 0)


_char_memo: dict[tuple[Partition, Partition], int] = {((), ()): 1}


def character(la: Partition, rho: Partition) -> int:
    """chi^la evaluated at the conjugacy class of cycle type rho.

    Both arguments must be partitions of the same weight.
    """
    if sum(la) != sum(rho):
        raise ValueError(f"weight mismatch: {la} vs {rho}")
    return _char(la, rho)


def _char(la: Partition, rho: Partition) -> int:
    key = (la, rho)
    cached = _char_memo.get(key)
    if cached is not None:
        return cached
    t, rest = rho[0], rho[1:]
    beta = _beta_set(la)
    members = set(beta)
    total = 0
    for b in beta:
        source = b - t
        if source < 0 or source in members:
            continue
        height = sum(1 for other in beta if source < other < b)
        smaller = _partition_from_beta(tuple(source if x == b else x for x in beta))
        term = _char(smaller, rest)
        total += -term if height % 2 else term
    _char_memo[key] = total
    return total


@cache
def dimension(la: Partition) -> int:
    """f^la by the hook-length product (independent of the recursion above)."""
    n = sum(la)
    if n == 0:
        return 1
    conj = conjugate(la)
    hooks = 1
    for i, row in enumerate(la):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(n) // hooks


def centralizer_order(rho: Partition) -> int:
    """z_rho = prod k^(m_k) m_k!, so the class size is n!/z_rho."""
    z = 1
    run = 0
    for i, p in enumerate(rho):
        run += 1
        z *= p
        if i + 1 == len(rho) or rho[i + 1] != p:
            z *= factorial(run)
            run = 0
    return z


def class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // centralizer_order(rho)


@dataclass(frozen=True)
class CharacterTable:
    """Complete character table of the symmetric group on n letters.

    ``values[(la, rho)]`` is chi^la at cycle type rho; both indices run
    over all partitions of n, listed in descending lexicographic order.
    """

    n: int
    classes: tuple[Partition, ...]
    values: dict[tuple[Partition, Partition], int]
    class_sizes: dict[Partition, int]

    def chi(self, la: Partition, rho: Partition) -> int:
        return self.values[(la, rho)]

    def row(self, la: Partition) -> tuple[int, ...]:
        return tuple(self.values[(la, rho)] for rho in self.classes)


_tables: dict[int, CharacterTable] = {}
_tables_lock = threading.Lock()
_cache_stats = {"hits": 0, "misses": 0}


def cache_stats() -> dict[str, int]:
    return dict(_cache_stats)


def _compute_table(n: int) -> CharacterTable:
    parts = tuple(partitions_of(n))
    values = {(la, rho): character(la, rho) for la in parts for rho in parts}
    sizes = {rho: class_size(rho) for rho in parts}
    return CharacterTable(n=n, classes=parts, values=values, class_sizes=sizes)


def character_table(n: int, cache_dir: str | None = None) -> CharacterTable:
    """The character table for weight n, computed once per process.

    Safe under concurrent first call: the winner publishes, the rest
    reuse.  When ``cache_dir`` is given, tables are loaded from / saved to
    ``characters_n{n}.json`` there; a version or content mismatch just
    triggers a recompute.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = _tables.get(n)
    if table is not None:
        _cache_stats["hits"] += 1
        _persist_if_missing(table, cache_dir)
        return table
    with _tables_lock:
        table = _tables.get(n)
        if table is not None:
            _cache_stats["hits"] += 1
            _persist_if_missing(table, cache_dir)
            return table
        _cache_stats["misses"] += 1
        if cache_dir is not None:
            table = _load_table(n, cache_dir)
        if table is None:
            table = _compute_table(n)
            if cache_dir is not None:
                _save_table(table, cache_dir)
        else:
            _char_memo.update(table.values)
        _tables[n] = table
        return table


def _table_path(n: int, cache_dir: str) -> str:
    return os.path.join(cache_dir, f"characters_n{n}.json")


def _persist_if_missing(table: CharacterTable, cache_dir: str | None) -> None:
    if cache_dir is not None and not os.path.exists(_table_path(table.n, cache_dir)):
        _save_table(table, cache_dir)


def _save_table(table: CharacterTable, cache_dir: str) -> None:
    payload = {
        "version": CACHE_FORMAT_VERSION,
        "n": table.n,
        "classes": [format_partition(rho) for rho in table.classes],
        "characters": {
            format_partition(la): [table.values[(la, rho)] for rho in table.classes]
            for la in table.classes
        },
    }
    try:
        os.makedirs(cache_dir, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
        with os.fdopen(fd, "w") as handle:
            json.dump(payload, handle)
        os.replace(tmp, _table_path(table.n, cache_dir))
    except OSError:
        pass  # caching is best-effort; the computation already succeeded


def _load_table(n: int, cache_dir: str) -> CharacterTable | None:
    path = _table_path(n, cache_dir)
    try:
        with open(path) as handle:
            payload = json.load(handle)
    except (OSError, ValueError):
        return None
    if payload.get("version") != CACHE_FORMAT_VERSION or payload.get("n") != n:
        return None
    try:
        classes = tuple(parse_partition(text) for text in payload["classes"])
        if sorted(classes, reverse=True) != sorted(partitions_of(n), reverse=True):
            return None
        values: dict[tuple[Partition, Partition], int] = {}
        for la_text, row in payload["characters"].items():
            la = parse_partition(la_text)
            if len(row) != len(classes):
                return None
            for rho, value in zip(classes, row):
                values[(la, rho)] = int(value)
        if len(values) != len(classes) ** 2:
            return None
    except (KeyError, ValueError, TypeError):
        return None
    sizes = {rho: class_size(rho) for rho in classes}
    return CharacterTable(n=n, classes=classes, values=values, class_sizes=sizes)


def _reset_for_tests() -> None:
    with _tables_lock:
        _tables.clear()
        _cache_stats["hits"] = 0
        _cache_stats["misses"] = 0
