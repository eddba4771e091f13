"""kronlab: exact Kronecker-coefficient computations and their stability.

The package computes Kronecker and reduced Kronecker coefficients through
symmetric-group character sums, runs an exact multi-alphabet
symmetric-function engine (Schur and power-sum bases, plethystic sigma and
chi series), evaluates growth-stability regions and degree bounds, and
reproduces the reference B-coefficient tables from a generating series.
"""

__version__ = "0.1.0"

from .bounds import ColumnBounds, RowBounds, column_bounds, leading_coefficient, row_bounds, sharpness_predicate
from .characters import CharacterTable, character, character_table, class_size, dimension
from .errors import ResourceLimitError
from .genfunc import (
    BSeries,
    W_EXPRESSION,
    b_coefficient,
    b_series_hook_form,
    b_series_theorem_form,
    cauchy_sign_expand,
)
from .kronecker import (
    GrowthVector,
    hook_grown_kronecker,
    internal_product,
    kronecker,
    reduced_kronecker,
    stabilization_onset,
)
from .partitions import (
    GrowthStep,
    HookCoords,
    Partition,
    conjugate,
    format_partition,
    grow,
    parse_partition,
    partition,
    partitions_of,
    remove_first_row,
    remove_first_row_and_column,
)
from .stability import (
    GENERATORS,
    Move,
    ScanReport,
    StabilityParams,
    TwoValueViolation,
    default_threshold,
    dom_contains,
    dom_sample,
    monotone_chain,
    scan_conjecture_510,
    semigroup_decompose,
    semigroup_member,
    setl4_contains,
    two_value_check,
)
from .symfunc import (
    EPS,
    ONE,
    X,
    Y,
    Z,
    AlphabetExpression,
    PowerSumSeries,
    SchurSeries,
    chi_series,
    lr_coefficients,
    multiply,
    power_eval,
    schur_at_integer,
    schur_at_monomials,
    schur_at_one_minus_eps,
    schur_plethysm,
    sigma_series,
)
from .tables import diff_against_fixture, generate_table, load_fixture, render

__all__ = [name for name in dir() if not name.startswith("_")]
