"""Closed-form degree bounds for the stabilization-kernel polynomials.

Two families of bounds on a triple (alpha, beta, gamma):

  column bounds   k1 = |alpha| + alpha_1 + beta'_1 + gamma'_1   (and the two
                  images of this formula under permuting the arguments),

  row bounds      k'1 = |alpha|+|beta|+|gamma| + beta_1,
                  k'2 = |alpha|+|beta|+|gamma| + gamma_1,
                  k'3 = |alpha|+|beta|+|gamma| + alpha_1+beta_1+gamma_1.

The column bound k1 is attained exactly when beta and gamma have at most
one column and alpha-minus-first-row has at most three; in that case the
top coefficient is the Laurent polynomial

    s_{(alpha-bar)'}[1/(vw) + v/w + w/v] * s_{beta'}[1] * s_{gamma'}[1].

``leading_coefficient`` evaluates that product; ``sharpness_predicate``
states the attainment condition directly, and the two agree (nonzero iff
sharp), which the test suite checks cell by cell.
"""

from __future__ import annotations

from typing import NamedTuple

from .partitions import Partition, conjugate, first_column, first_part, remove_first_row, weight
from .symfunc import LaurentPolynomial, schur_at_integer, schur_at_monomials

# the three-letter Laurent alphabet 1/(vw), v/w, w/v as (v, w) exponents
HOOK_ALPHABET: list[tuple[int, int]] = [(-1, -1), (1, -1), (-1, 1)]


class ColumnBounds(NamedTuple):
    k1: int
    k2: int
    k3: int


class RowBounds(NamedTuple):
    k1: int
    k2: int
    k3: int


def column_bounds(alpha: Partition, beta: Partition, gamma: Partition) -> ColumnBounds:
    return ColumnBounds(
        k1=weight(alpha) + first_part(alpha) + first_column(beta) + first_column(gamma),
        k2=weight(beta) + first_part(beta) + first_column(alpha) + first_column(gamma),
        k3=weight(gamma) + first_part(gamma) + first_column(alpha) + first_column(beta),
    )


def row_bounds(alpha: Partition, beta: Partition, gamma: Partition) -> RowBounds:
    total = weight(alpha) + weight(beta) + weight(gamma)
    return RowBounds(
        k1=total + first_part(beta),
        k2=total + first_part(gamma),
        k3=total + first_part(alpha) + first_part(beta) + first_part(gamma),
    )


def sharpness_predicate(alpha: Partition, beta: Partition, gamma: Partition) -> bool:
    """True iff the k1 column bound is attained: beta and gamma are single
    columns (first part <= 1) and alpha minus its first row spans at most
    three columns (first part <= 3)."""
    return (
        first_part(beta) <= 1
        and first_part(gamma) <= 1
        and first_part(remove_first_row(alpha)) <= 3
    )


def leading_coefficient(
    alpha: Partition, beta: Partition, gamma: Partition
) -> LaurentPolynomial:
    """Coefficient of the top power of the k1 column variable, as a Laurent
    polynomial in (v, w); the empty dict is zero."""
    scalar = schur_at_integer(conjugate(beta), 1) * schur_at_integer(conjugate(gamma), 1)
    if not scalar:
        return {}
    alpha_bar = remove_first_row(alpha)
    poly = schur_at_monomials(conjugate(alpha_bar), HOOK_ALPHABET)
    return {key: scalar * coeff for key, coeff in poly.items()}
