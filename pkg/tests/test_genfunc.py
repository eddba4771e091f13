from fractions import Fraction

import pytest

from kronlab.errors import ResourceLimitError
from kronlab.genfunc import (
    W_EXPRESSION,
    b_coefficient,
    b_series_hook_form,
    b_series_theorem_form,
    cached_theorem_series,
    calibrate_w,
    cauchy_sign_expand,
    hook_paren,
    prefactor_expression_series,
    prefactor_series,
    theorem_paren,
    w_candidates,
)
from kronlab.partitions import partitions_up_to
from kronlab.symfunc import X, Y, Z, SchurSeries, sigma_series

PROBES = [
    (((), (), ()), 1),
    (((1,), (), ()), 0),
    (((), (1,), (1,)), 3),
    (((1,), (1,), ()), 0),
    (((1,), (1,), (1,)), 0),
]


def test_w_definition():
    assert W_EXPRESSION == X + Y + Z + X * Y + X * Z + Y * Z
    assert "singles and pairs" in w_candidates()


def test_w_calibration_is_unique():
    # the low-degree reference cells single out the adopted W among the
    # candidate family; in particular the variant with the triple product
    # XYZ added fails the ((1),(1),(1)) cell
    assert calibrate_w(PROBES, (1, 1, 1)) == ["singles and pairs"]


def test_theorem_form_probe_cells():
    series = b_series_theorem_form((1, 1, 1))
    for key, expected in PROBES:
        assert series.series.coefficient(*key) == expected


def test_spot_cells():
    series = cached_theorem_series((3, 3, 3))
    assert series.coefficient((), (), ()) == 1
    assert series.coefficient((2,), (1,), (1,)) == -25
    assert series.coefficient((3,), (3,), (3,)) == -1597
    assert series.coefficient((2, 1), (2, 1), (2, 1)) == -3470
    assert series.coefficient((1, 1, 1), (1, 1, 1), (1, 1, 1)) == -175


def test_forms_agree_small():
    caps = (2, 2, 2)
    assert b_series_theorem_form(caps).series == b_series_hook_form(caps).series


def test_prefactor_routes_agree():
    # the structured product (closed Cauchy factors + the character-oracle
    # triple factor) equals the generic plethystic expansion
    caps = (2, 2, 2)
    assert prefactor_series(caps) == prefactor_expression_series(W_EXPRESSION, caps)


def test_derivation_chain():
    # 3/4 + 1/4 sigma[(eps-1)W] - 1/2 chi[W] equals the even-arm hook part
    # of the hook-form parenthesis
    caps = (2, 2, 2)
    from kronlab.symfunc import EPS, ONE, chi_series, schur_plethysm

    theorem_no_yzx = (
        SchurSeries(caps, {((), (), ()): Fraction(3, 4)})
        + sigma_series((EPS - ONE) * W_EXPRESSION, caps).scale(Fraction(1, 4))
        + chi_series(W_EXPRESSION, caps).scale(Fraction(-1, 2))
    )
    hook_no_yzx = SchurSeries.one(caps)
    for wgt in range(1, sum(caps) + 1):
        for arm in range(0, wgt, 2):
            leg = wgt - 1 - arm
            hook = (arm + 1,) + (1,) * leg
            hook_no_yzx = hook_no_yzx + schur_plethysm(hook, W_EXPRESSION, caps).scale(
                -((-1) ** leg)
            )
    assert theorem_no_yzx == hook_no_yzx


def test_parens_agree():
    caps = (2, 2, 2)
    assert theorem_paren(caps) == hook_paren(caps)


def test_b_coefficient_and_forms():
    assert b_coefficient((3,), (3,), (3,)) == -1597
    assert b_coefficient((2,), (1,), (1,), form="hook") == -25
    with pytest.raises(ValueError):
        b_coefficient((1,), (1,), (1,), form="other")


def test_b_coefficient_cap_guard():
    with pytest.raises(ResourceLimitError):
        b_coefficient((7,), (7,), (7,), max_cap=6)


def test_symmetry_in_last_two_indices():
    series = cached_theorem_series((3, 3, 3))
    for alpha in partitions_up_to(3):
        for beta in partitions_up_to(3):
            for gamma in partitions_up_to(3):
                assert series.coefficient(alpha, beta, gamma) == series.coefficient(
                    alpha, gamma, beta
                )


def test_integrality_guard_fires_on_fractional_coefficient():
    from kronlab.genfunc import _finalize

    broken = SchurSeries(
        (1, 1, 1), {((), (), ()): 1, ((1,), (), ()): Fraction(1, 2)}
    )
    with pytest.raises(AssertionError) as err:
        _finalize(broken, "theorem")
    assert "((1,), (), ())" in str(err.value)


def test_constant_term_guard():
    from kronlab.genfunc import _finalize

    with pytest.raises(AssertionError):
        _finalize(SchurSeries((1, 1, 1), {((), (), ()): 2}), "theorem")


def test_cauchy_sign_expand():
    assert cauchy_sign_expand(()) == (1, (), 1)
    assert cauchy_sign_expand((2, 1)) == (-1, (2, 1), 2)
    assert cauchy_sign_expand((2, 2)) == (1, (2, 2), 0)
    assert cauchy_sign_expand((3,)) == (-1, (1, 1, 1), 2)
