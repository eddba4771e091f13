from itertools import permutations

from hypothesis import given, settings

from kronlab.bounds import (
    HOOK_ALPHABET,
    column_bounds,
    leading_coefficient,
    row_bounds,
    sharpness_predicate,
)
from kronlab.partitions import partitions_up_to

from conftest import partitions


def test_column_bounds_examples():
    assert column_bounds((), (), ()) == (0, 0, 0)
    assert column_bounds((2,), (1,), (1,)).k1 == 6
    assert column_bounds((2, 1), (1, 1), (1,)) == (8, 6, 6)


def test_row_bounds_examples():
    assert row_bounds((), (), ()) == (0, 0, 0)
    assert row_bounds((1,), (1,), (1,)) == (4, 4, 6)
    assert row_bounds((2,), (1, 1), ()) == (5, 4, 7)


def test_row_bounds_third_dominates():
    for alpha in partitions_up_to(3):
        for beta in partitions_up_to(3):
            for gamma in partitions_up_to(3):
                k = row_bounds(alpha, beta, gamma)
                assert k.k3 >= k.k1 and k.k3 >= k.k2


@settings(max_examples=50)
@given(partitions(max_weight=6), partitions(max_weight=6), partitions(max_weight=6))
def test_column_bounds_equivariance(alpha, beta, gamma):
    base = {(alpha, beta, gamma): column_bounds(alpha, beta, gamma)}
    (k1, k2, k3) = base[(alpha, beta, gamma)]
    by_argument = {alpha: k1, beta: k2, gamma: k3}
    for perm in permutations((alpha, beta, gamma)):
        permuted = column_bounds(*perm)
        assert permuted == (by_argument[perm[0]], by_argument[perm[1]], by_argument[perm[2]])
    assert min(*column_bounds(alpha, beta, gamma), *row_bounds(alpha, beta, gamma)) >= 0


def test_sharpness_examples():
    assert sharpness_predicate((3, 2), (1, 1), (1,))
    assert not sharpness_predicate((2, 2), (2,), (1,))
    assert not sharpness_predicate((5, 4), (1,), (1,))
    assert sharpness_predicate((), (), ())


def test_leading_coefficient_values():
    third = {(-1, -1): 1, (1, -1): 1, (-1, 1): 1}
    assert leading_coefficient((2, 1), (1,), (1,)) == third
    assert leading_coefficient((2, 2), (1,), (1,)) == {(-2, 0): 1, (0, -2): 1, (0, 0): 1}
    assert leading_coefficient((2,), (2,), ()) == {}


def test_alphabet_is_the_hook_triple():
    assert HOOK_ALPHABET == [(-1, -1), (1, -1), (-1, 1)]


def test_sharpness_iff_nonzero_leading_small():
    for alpha in partitions_up_to(3):
        for beta in partitions_up_to(3):
            for gamma in partitions_up_to(3):
                assert bool(leading_coefficient(alpha, beta, gamma)) == sharpness_predicate(
                    alpha, beta, gamma
                )
