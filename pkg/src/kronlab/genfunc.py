"""The generating series for the B coefficients, in its two equivalent forms.

Theorem form:
    sigma[XYZ + 2W] * (3/4 + 1/4 sigma[(eps-1)W] - 1/2 chi[W] + chi[YZ-X])

Hook form:
    sigma[XYZ + 2W] * (1 - sum_{a even, b} (-1)^b s_(a|b)[W]
                         + sum_{a, b} (-1)^b s_(a|b)[YZ-X])

with W = X + Y + Z + XY + XZ + YZ.  This W was fixed by calibration: among
the candidate alphabet sums built from distinct-letter products it is the
only one whose series reproduces every cell of the reference coefficient
tables (see ``calibrate_w`` and the tables module); note that adding the
triple product XYZ to W survives the degree-2 cells but fails at weight 3.

The common prefactor sigma[XYZ + 2W] is assembled from closed Schur forms:
sigma[A] is a sum of one-row Schur functions, sigma[AB] is the Cauchy
diagonal, and sigma[XYZ] has the Kronecker coefficients themselves as
coefficients, so the brute-force character oracle feeds the series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import ResourceLimitError
from .kronecker import kronecker
from .partitions import Partition, conjugate, partitions_of, weight
from .symfunc import (
    EPS,
    ONE,
    X,
    Y,
    Z,
    AlphabetExpression,
    Caps,
    SchurSeries,
    chi_series,
    schur_at_one_minus_eps,
    schur_plethysm,
    sigma_series,
)

W_EXPRESSION: AlphabetExpression = X + Y + Z + X * Y + X * Z + Y * Z

DEFAULT_MAX_CAP = 6


def w_candidates() -> dict[str, AlphabetExpression]:
    """The candidate family the W definition was calibrated over."""
    return {
        "single letters": X + Y + Z,
        "pairwise products": X * Y + X * Z + Y * Z,
        "singles and pairs": X + Y + Z + X * Y + X * Z + Y * Z,
        "all products": (ONE + X) * (ONE + Y) * (ONE + Z) - ONE,
    }


@dataclass(frozen=True)
class BSeries:
    """A truncated B-coefficient series with its construction route."""

    series: SchurSeries
    form: str  # "theorem" or "hook"

    @property
    def caps(self) -> Caps:
        return self.series.caps

    def coefficient(self, alpha: Partition, beta: Partition, gamma: Partition) -> int:
        value = self.series.coefficient(tuple(alpha), tuple(beta), tuple(gamma))
        return int(value)


def _sigma_single(slot: int, caps: Caps) -> SchurSeries:
    terms = {}
    for n in range(caps[slot] + 1):
        key: list[Partition] = [(), (), ()]
        key[slot] = (n,) if n else ()
        terms[tuple(key)] = 1
    return SchurSeries(caps, terms)


def _sigma_pair(slot1: int, slot2: int, caps: Caps) -> SchurSeries:
    terms = {}
    for n in range(min(caps[slot1], caps[slot2]) + 1):
        for la in partitions_of(n):
            key: list[Partition] = [(), (), ()]
            key[slot1] = la
            key[slot2] = la
            terms[tuple(key)] = 1
    return SchurSeries(caps, terms)


def _sigma_xyz(caps: Caps) -> SchurSeries:
    """sigma[XYZ] via the character oracle: the coefficient of
    s_la[X] s_mu[Y] s_nu[Z] is the Kronecker coefficient."""
    terms = {}
    for n in range(min(caps) + 1):
        for la in partitions_of(n):
            for mu in partitions_of(n):
                for nu in partitions_of(n):
                    g = kronecker(la, mu, nu)
                    if g:
                        terms[(la, mu, nu)] = g
    return SchurSeries(caps, terms)


def prefactor_series(caps: Caps) -> SchurSeries:
    """sigma[XYZ + 2W] = sigma[XYZ] * (sigma[X] sigma[Y] sigma[Z]
    sigma[XY] sigma[XZ] sigma[YZ])^2, multiplied in the Schur basis."""
    out = SchurSeries.one(caps)
    for factor in (
        _sigma_single(0, caps),
        _sigma_single(1, caps),
        _sigma_single(2, caps),
        _sigma_pair(0, 1, caps),
        _sigma_pair(0, 2, caps),
        _sigma_pair(1, 2, caps),
    ):
        squared = factor * factor
        out = out * squared
    return out * _sigma_xyz(caps)


def hooks_up_to(max_weight: int) -> Iterator[tuple[int, int]]:
    """(arm, leg) pairs with arm + leg + 1 <= max_weight."""
    for wgt in range(1, max_weight + 1):
        for arm in range(wgt):
            yield arm, wgt - 1 - arm


def theorem_paren(caps: Caps, w: AlphabetExpression = W_EXPRESSION) -> SchurSeries:
    """3/4 + 1/4 sigma[(eps-1)W] - 1/2 chi[W] + chi[YZ-X]."""
    constant = SchurSeries(caps, {((), (), ()): Fraction(3, 4)})
    return (
        constant
        + sigma_series((EPS - ONE) * w, caps).scale(Fraction(1, 4))
        + chi_series(w, caps).scale(Fraction(-1, 2))
        + chi_series(Y * Z - X, caps)
    )


def hook_paren(caps: Caps, w: AlphabetExpression = W_EXPRESSION) -> SchurSeries:
    """1 - sum_{a even, b} (-1)^b s_(a|b)[W] + sum_{a,b} (-1)^b s_(a|b)[YZ-X]."""
    out = SchurSeries.one(caps)
    yzx = Y * Z - X
    for arm, leg in hooks_up_to(sum(caps)):
        hook = (arm + 1,) + (1,) * leg
        sign = -1 if leg % 2 else 1
        if arm % 2 == 0:
            out = out + schur_plethysm(hook, w, caps).scale(-sign)
        out = out + schur_plethysm(hook, yzx, caps).scale(sign)
    return out


def _finalize(series: SchurSeries, form: str) -> BSeries:
    integral = {}
    for key, coeff in series.terms.items():
        as_fraction = Fraction(coeff)
        if as_fraction.denominator != 1:
            raise AssertionError(
                f"non-integral B coefficient {coeff} at {key} in the {form} form; "
                "the W definition or the series wiring is wrong"
            )
        integral[key] = int(as_fraction)
    if integral.get(((), (), ()), 0) != 1:
        raise AssertionError(f"the {form} form has constant term != 1")
    return BSeries(series=SchurSeries(series.caps, integral), form=form)


def b_series_theorem_form(caps: Caps) -> BSeries:
    return _finalize(prefactor_series(caps) * theorem_paren(caps), "theorem")


def b_series_hook_form(caps: Caps) -> BSeries:
    return _finalize(prefactor_series(caps) * hook_paren(caps), "hook")


_series_cache: dict[Caps, BSeries] = {}


def cached_theorem_series(caps: Caps) -> BSeries:
    """Theorem-form series cache; any cached series whose caps dominate the
    request componentwise is reused."""
    caps = tuple(caps)
    for have, series in _series_cache.items():
        if all(h >= c for h, c in zip(have, caps)):
            return series
    series = b_series_theorem_form(caps)
    _series_cache[caps] = series
    return series


def b_coefficient(
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    form: str = "theorem",
    max_cap: int = DEFAULT_MAX_CAP,
) -> int:
    """The coefficient of s_alpha[X] s_beta[Y] s_gamma[Z] in the B series."""
    caps = (weight(alpha), weight(beta), weight(gamma))
    if max(caps) > max_cap:
        raise ResourceLimitError(
            f"B coefficient at weights {caps} exceeds the configured cap {max_cap}"
        )
    if form == "theorem":
        series = cached_theorem_series(caps)
    elif form == "hook":
        series = b_series_hook_form(caps)
    else:
        raise ValueError(f"unknown form {form!r}; expected 'theorem' or 'hook'")
    return series.coefficient(alpha, beta, gamma)


def cauchy_sign_expand(la: Partition) -> tuple[int, Partition, int]:
    """One Cauchy/sign-rule summand: ((-1)^|la|, la', s_la[1-eps]).

    These are the ingredients of the rewriting
    sigma[(eps-1)W] = sum_la s_la[1-eps] (-1)^|la| s_{la'}[W].
    """
    la = tuple(la)
    sign = -1 if weight(la) % 2 else 1
    return (sign, conjugate(la), schur_at_one_minus_eps(la))


def calibrate_w(
    probes: list[tuple[tuple[Partition, Partition, Partition], int]],
    caps: Caps,
) -> list[str]:
    """Names of the candidate W definitions whose theorem-form series match
    every probe cell.  Run with the reference-table probes, this singles
    out the adopted definition."""
    matches = []
    for name, candidate in w_candidates().items():
        series = prefactor_expression_series(candidate, caps) * theorem_paren(caps, candidate)
        if all(series.coefficient(*key) == expected for key, expected in probes):
            matches.append(name)
    return matches


def prefactor_expression_series(w: AlphabetExpression, caps: Caps) -> SchurSeries:
    """sigma[XYZ + 2W] through the generic plethystic engine, for an
    arbitrary candidate W (cross-checks the structured product)."""
    return sigma_series(X * Y * Z + 2 * w, caps)
