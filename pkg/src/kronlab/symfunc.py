"""Exact symmetric-function series over the alphabets X, Y, Z.

Design: every plethystic series is computed at the power-sum level, where
plethysm into alphabet expressions is literally multiplicative, and only
converted to the Schur basis at the end, through symmetric-group character
values.  Series are truncated by a per-alphabet total-degree cap; since
multiplication only raises degree, truncation is exact for every
coefficient inside the caps.

The sign alphabet eps acts on power sums by p_k[eps * A] = (-1)^k p_k[A];
integer coefficients act linearly.  Schur-basis products use
Littlewood-Richardson coefficients computed by counting lattice skew
tableaux.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Iterator

from .characters import centralizer_order, character
from .partitions import (
    Partition,
    conjugate,
    format_partition,
    is_hook,
    parse_partition,
    partitions_of,
    weight,
)

ALPHABETS = ("X", "Y", "Z")

Caps = tuple[int, int, int]
SeriesKey = tuple[Partition, Partition, Partition]

EMPTY_KEY: SeriesKey = ((), (), ())


# ---------------------------------------------------------------------------
# alphabet expressions


class AlphabetExpression:
    """Integer-linear combination of products of X, Y, Z and the sign eps.

    Terms are normalized: one entry per (alphabet subset, eps flag), zero
    coefficients dropped.  Each alphabet may appear at most once per term;
    eps * eps = 1.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[tuple[str, ...], bool], int] | None = None):
        self.terms: dict[tuple[tuple[str, ...], bool], int] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    self.terms[key] = self.terms.get(key, 0) + coeff
            self.terms = {k: c for k, c in self.terms.items() if c}

    @classmethod
    def letter(cls, name: str) -> "AlphabetExpression":
        if name not in ALPHABETS:
            raise ValueError(f"unknown alphabet {name!r}")
        return cls({((name,), False): 1})

    @classmethod
    def unit(cls) -> "AlphabetExpression":
        return cls({((), False): 1})

    @classmethod
    def sign(cls) -> "AlphabetExpression":
        return cls({((), True): 1})

    def __add__(self, other: "AlphabetExpression") -> "AlphabetExpression":
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return AlphabetExpression(merged)

    def __sub__(self, other: "AlphabetExpression") -> "AlphabetExpression":
        return self + (-other)

    def __neg__(self) -> "AlphabetExpression":
        return AlphabetExpression({key: -coeff for key, coeff in self.terms.items()})

    def __rmul__(self, scalar: int) -> "AlphabetExpression":
        if not isinstance(scalar, int):
            return NotImplemented
        return AlphabetExpression({key: scalar * coeff for key, coeff in self.terms.items()})

    def __mul__(self, other: "AlphabetExpression | int") -> "AlphabetExpression":
        if isinstance(other, int):
            return other * self
        out: dict[tuple[tuple[str, ...], bool], int] = {}
        for (al1, eps1), c1 in self.terms.items():
            for (al2, eps2), c2 in other.terms.items():
                if set(al1) & set(al2):
                    raise ValueError(
                        f"alphabet product {al1} * {al2} would repeat a letter; "
                        "multiplicities above 1 are not supported"
                    )
                key = (tuple(sorted(al1 + al2)), eps1 != eps2)
                out[key] = out.get(key, 0) + c1 * c2
        return AlphabetExpression(out)

    def has_constant_part(self) -> bool:
        return any(alphas == () and coeff for (alphas, _), coeff in self.terms.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AlphabetExpression) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (alphas, eps), coeff in sorted(self.terms.items()):
            name = "".join(alphas) or "1"
            if eps:
                name = "eps" + ("*" + name if alphas else "")
            bits.append(f"{coeff}*{name}")
        return " + ".join(bits)


X = AlphabetExpression.letter("X")
Y = AlphabetExpression.letter("Y")
Z = AlphabetExpression.letter("Z")
EPS = AlphabetExpression.sign()
ONE = AlphabetExpression.unit()


# ---------------------------------------------------------------------------
# series containers


def _merge_parts(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def deglex_key(la: Partition) -> tuple[int, tuple[int, ...]]:
    """Sort key for the degree-lex order: weight ascending, then
    lexicographically descending within a weight."""
    return (sum(la), tuple(-p for p in la))


def series_key_order(key: SeriesKey) -> tuple:
    return tuple(deglex_key(la) for la in key)


class _Series:
    """Shared container logic for truncated three-alphabet series."""

    __slots__ = ("caps", "terms")

    def __init__(self, caps: Caps, terms: dict[SeriesKey, Fraction | int] | None = None):
        self.caps = tuple(caps)
        self.terms: dict[SeriesKey, Fraction | int] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff and self._fits(key):
                    self.terms[key] = coeff

    def _fits(self, key: SeriesKey) -> bool:
        return all(sum(la) <= cap for la, cap in zip(key, self.caps))

    def coefficient(self, la: Partition, mu: Partition = (), nu: Partition = ()) -> Fraction | int:
        key = (tuple(la), tuple(mu), tuple(nu))
        if not self._fits(key):
            raise ValueError(f"key {key} lies beyond the series caps {self.caps}")
        return self.terms.get(key, 0)

    def _require_same_caps(self, other: "_Series") -> None:
        if self.caps != other.caps:
            raise ValueError(f"cap mismatch: {self.caps} vs {other.caps}")

    def __add__(self, other):
        self._require_same_caps(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return type(self)(self.caps, merged)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        if not factor:
            return type(self)(self.caps)
        return type(self)(self.caps, {k: factor * c for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, type(self))
            and self.caps == other.caps
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError(f"{type(self).__name__} is unhashable")

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: series_key_order(kv[0]))

    def __repr__(self) -> str:
        inside = ", ".join(f"{key}: {coeff}" for key, coeff in self.sorted_items())
        return f"{type(self).__name__}(caps={self.caps}, {{{inside}}})"


class PowerSumSeries(_Series):
    """Series in products p_rho[X] p_sigma[Y] p_tau[Z]; multiplication is
    concatenation of cycle types, so this is where all hard work happens."""

    @classmethod
    def one(cls, caps: Caps) -> "PowerSumSeries":
        return cls(caps, {EMPTY_KEY: 1})

    def __mul__(self, other: "PowerSumSeries") -> "PowerSumSeries":
        self._require_same_caps(other)
        caps = self.caps
        out: dict[SeriesKey, Fraction | int] = {}
        for (x1, y1, z1), c1 in self.terms.items():
            for (x2, y2, z2), c2 in other.terms.items():
                if (
                    sum(x1) + sum(x2) > caps[0]
                    or sum(y1) + sum(y2) > caps[1]
                    or sum(z1) + sum(z2) > caps[2]
                ):
                    continue
                key = (_merge_parts(x1, x2), _merge_parts(y1, y2), _merge_parts(z1, z2))
                out[key] = out.get(key, 0) + c1 * c2
        return PowerSumSeries(caps, out)


class SchurSeries(_Series):
    """Series in products s_la[X] s_mu[Y] s_nu[Z] with exact coefficients."""

    @classmethod
    def one(cls, caps: Caps) -> "SchurSeries":
        return cls(caps, {EMPTY_KEY: 1})

    def __mul__(self, other: "SchurSeries") -> "SchurSeries":
        self._require_same_caps(other)
        caps = self.caps
        out: dict[SeriesKey, Fraction | int] = {}
        for (x1, y1, z1), c1 in self.terms.items():
            for (x2, y2, z2), c2 in other.terms.items():
                if (
                    sum(x1) + sum(x2) > caps[0]
                    or sum(y1) + sum(y2) > caps[1]
                    or sum(z1) + sum(z2) > caps[2]
                ):
                    continue
                c12 = c1 * c2
                for nx, cx in lr_expansion(x1, x2):
                    for ny, cy in lr_expansion(y1, y2):
                        cxy = cx * cy
                        for nz, cz in lr_expansion(z1, z2):
                            key = (nx, ny, nz)
                            out[key] = out.get(key, 0) + c12 * cxy * cz
        return SchurSeries(caps, out)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients


def _contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(outer[i] >= inner[i] for i in range(len(inner)))


def _count_lr_fillings(outer: Partition, inner: Partition, content: Partition) -> int:
    """Number of semistandard fillings of outer/inner with given content
    whose reverse reading word is a lattice word."""
    rows = len(outer)
    inner_padded = tuple(inner) + (0,) * (rows - len(inner))
    cells: list[tuple[int, int]] = []
    for r in range(rows):
        for c in range(outer[r] - 1, inner_padded[r] - 1, -1):
            cells.append((r, c))
    nvalues = len(content)
    remaining = list(content)
    filling: dict[tuple[int, int], int] = {}
    total = 0

    def place(idx: int, counts: list[int]) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        right = filling.get((r, c + 1))
        above = filling.get((r - 1, c))
        for v in range(1, nvalues + 1):
            if not remaining[v - 1]:
                continue
            if right is not None and v > right:
                continue
            if above is not None and v <= above:
                continue
            if v > 1 and counts[v - 1] >= counts[v - 2]:
                continue
            filling[(r, c)] = v
            remaining[v - 1] -= 1
            counts[v - 1] += 1
            place(idx + 1, counts)
            counts[v - 1] -= 1
            remaining[v - 1] += 1
            del filling[(r, c)]

    place(0, [0] * nvalues)
    return total


@cache
def lr_coefficients(la: Partition, mu: Partition) -> dict[Partition, int]:
    """Expansion s_la * s_mu = sum_nu c^nu_{la,mu} s_nu (ordinary product)."""
    if weight(mu) == 0:
        return {la: 1}
    if weight(la) == 0:
        return {mu: 1}
    out: dict[Partition, int] = {}
    for nu in partitions_of(weight(la) + weight(mu)):
        if not _contains(nu, la):
            continue
        c = _count_lr_fillings(nu, la, mu)
        if c:
            out[nu] = c
    return out


@cache
def lr_expansion(la: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    return tuple(sorted(lr_coefficients(la, mu).items()))


def multiply(s1: SchurSeries, s2: SchurSeries) -> SchurSeries:
    """Truncated product of Schur series (commutative, associative up to
    the shared caps)."""
    return s1 * s2


# ---------------------------------------------------------------------------
# basis conversions


def power_to_schur(ps: PowerSumSeries) -> SchurSeries:
    out: dict[SeriesKey, Fraction | int] = {}
    for (rx, ry, rz), coeff in ps.terms.items():
        for lx in partitions_of(sum(rx)):
            cx = character(lx, rx)
            if not cx:
                continue
            for ly in partitions_of(sum(ry)):
                cy = character(ly, ry)
                if not cy:
                    continue
                cxy = coeff * cx * cy
                for lz in partitions_of(sum(rz)):
                    cz = character(lz, rz)
                    if not cz:
                        continue
                    key = (lx, ly, lz)
                    out[key] = out.get(key, 0) + cxy * cz
    return SchurSeries(ps.caps, out)


def schur_basis_element(la: Partition, alphabet: int, caps: Caps) -> SchurSeries:
    """s_la in the chosen alphabet slot (0 for X, 1 for Y, 2 for Z)."""
    key: list[Partition] = [(), (), ()]
    key[alphabet] = tuple(la)
    return SchurSeries(caps, {tuple(key): 1})


def schur_to_power_single(la: Partition) -> dict[Partition, Fraction]:
    """s_la = sum_rho chi^la(rho)/z_rho p_rho, one alphabet."""
    return {
        rho: Fraction(character(la, rho), centralizer_order(rho))
        for rho in partitions_of(weight(la))
        if character(la, rho)
    }


# ---------------------------------------------------------------------------
# plethystic evaluation


def power_eval(expr: AlphabetExpression, k: int, caps: Caps | None = None) -> PowerSumSeries:
    """p_k[expr]: additive over terms, multiplicative over alphabet
    products, with p_k[eps * A] = (-1)^k p_k[A].

    With explicit ``caps`` the result is truncated accordingly; the
    default caps (k, k, k) hold every monomial.
    """
    if k < 1:
        raise ValueError("power-sum index must be >= 1")
    if caps is None:
        caps = (k, k, k)
    terms: dict[SeriesKey, Fraction | int] = {}
    for (alphas, eps), coeff in expr.terms.items():
        signed = -coeff if (eps and k % 2) else coeff
        key = tuple((k,) if name in alphas else () for name in ALPHABETS)
        terms[key] = terms.get(key, 0) + signed
    return PowerSumSeries(caps, terms)


def _exp(ps: PowerSumSeries) -> PowerSumSeries:
    total_cap = sum(ps.caps)
    result = PowerSumSeries.one(ps.caps)
    term = PowerSumSeries.one(ps.caps)
    for j in range(1, total_cap + 1):
        term = (term * ps).scale(Fraction(1, j))
        if term.is_zero():
            break
        result = result + term
    return result


def sigma_power_series(expr: AlphabetExpression, caps: Caps) -> PowerSumSeries:
    if expr.has_constant_part():
        raise ValueError("series of an expression with a degree-0 component diverges")
    total = PowerSumSeries(caps)
    for k in range(1, max(caps) + 1):
        pk = power_eval(expr, k, caps)
        if not pk.is_zero():
            total = total + pk.scale(Fraction(1, k))
    return _exp(total)


def sigma_series(expr: AlphabetExpression, caps: Caps) -> SchurSeries:
    """sigma[expr] = sum_n h_n[expr], truncated, in the Schur basis."""
    return power_to_schur(sigma_power_series(expr, caps))


def chi_power_series(expr: AlphabetExpression, caps: Caps) -> PowerSumSeries:
    if expr.has_constant_part():
        raise ValueError("series of an expression with a degree-0 component diverges")
    total = PowerSumSeries(caps)
    for k in range(1, max(caps) + 1):
        pk = power_eval(expr, k, caps)
        if not pk.is_zero():
            total = total + pk
    return total


def chi_series(expr: AlphabetExpression, caps: Caps) -> SchurSeries:
    """chi[expr] = sum_{k>=1} p_k[expr], truncated, in the Schur basis."""
    return power_to_schur(chi_power_series(expr, caps))


def schur_plethysm(la: Partition, expr: AlphabetExpression, caps: Caps) -> SchurSeries:
    """s_la[expr] through the power-sum expansion of s_la."""
    if expr.has_constant_part():
        raise ValueError("series of an expression with a degree-0 component diverges")
    la = tuple(la)
    if not la:
        return SchurSeries.one(caps)
    pks = {k: power_eval(expr, k, caps) for k in range(1, weight(la) + 1)}
    total = PowerSumSeries(caps)
    for rho in partitions_of(weight(la)):
        chi_val = character(la, rho)
        if not chi_val:
            continue
        prod = PowerSumSeries.one(caps)
        for k in rho:
            prod = prod * pks[k]
            if prod.is_zero():
                break
        if prod.is_zero():
            continue
        total = total + prod.scale(Fraction(chi_val, centralizer_order(rho)))
    return power_to_schur(total)


# ---------------------------------------------------------------------------
# specializations


def schur_at_integer(la: Partition, n: int) -> int:
    """s_la(1^n): number of semistandard tableaux of shape la with entries
    at most n, by the content/hook product."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    la = tuple(la)
    if not la:
        return 1
    conj = conjugate(la)
    numerator = 1
    denominator = 1
    for i, row in enumerate(la):
        for j in range(row):
            numerator *= n + j - i
            denominator *= row - j + conj[j] - i - 1
    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise AssertionError(f"hook-content product not integral for {la}, {n}")
    return value


def schur_at_one_minus_eps(la: Partition) -> int:
    """s_la[1 - eps]: 1 on the empty partition, 2 on hooks, 0 otherwise."""
    la = tuple(la)
    if not la:
        return 1
    return 2 if is_hook(la) else 0


LaurentMonomial = tuple[int, int]
LaurentPolynomial = dict[LaurentMonomial, int]


def ssyt_shapes(la: Partition, max_entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All semistandard tableaux of shape la with entries in 1..max_entry."""
    la = tuple(la)
    if len(la) > max_entry:
        return
    if not la:
        yield ()
        return

    def rows(r: int, above: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if r == len(la):
            yield ()
            return
        for row in _ssyt_rows(la[r], above, max_entry):
            for rest in rows(r + 1, row):
                yield (row,) + rest

    yield from rows(0, ())


def _ssyt_rows(
    width: int, above: tuple[int, ...], max_entry: int
) -> Iterator[tuple[int, ...]]:
    def fill(j: int, minimum: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if j == width:
            yield acc
            return
        lower = minimum
        if j < len(above):
            lower = max(lower, above[j] + 1)
        for v in range(lower, max_entry + 1):
            yield from fill(j + 1, v, acc + (v,))

    yield from fill(0, 1, ())


def schur_at_monomials(la: Partition, monomials: list[LaurentMonomial]) -> LaurentPolynomial:
    """s_la evaluated at an explicit list of Laurent monomials in (v, w),
    each given as an exponent pair; zero when la has more rows than there
    are monomials."""
    out: LaurentPolynomial = {}
    for tableau in ssyt_shapes(tuple(la), len(monomials)):
        ev = ew = 0
        for row in tableau:
            for entry in row:
                mv, mw = monomials[entry - 1]
                ev += mv
                ew += mw
        key = (ev, ew)
        out[key] = out.get(key, 0) + 1
    return {k: c for k, c in out.items() if c}


# ---------------------------------------------------------------------------
# serialization


def series_to_json(series: SchurSeries) -> dict:
    """JSON form: caps header plus a 'laX|laY|laZ' -> 'p/q' mapping."""
    coeffs = {}
    for key, coeff in series.sorted_items():
        name = "|".join(format_partition(la) for la in key)
        coeffs[name] = str(Fraction(coeff))
    return {"caps": list(series.caps), "coefficients": coeffs}


def series_from_json(payload: dict) -> SchurSeries:
    caps = tuple(payload["caps"])
    terms: dict[SeriesKey, Fraction | int] = {}
    for name, text in payload["coefficients"].items():
        parts = name.split("|")
        if len(parts) != 3:
            raise ValueError(f"bad series key {name!r}")
        key = tuple(parse_partition(p) for p in parts)
        value = Fraction(text)
        terms[key] = int(value) if value.denominator == 1 else value
    return SchurSeries(caps, terms)
