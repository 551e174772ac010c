import itertools

import pytest

from core.combinatorics import (
    Subset, SubsetOrdering, binomial, enumerate_subsets, index_map, iter_bits, rank, subsets_of, unrank,
)
from core.errors import ParameterError


@pytest.mark.parametrize("n,k,expected", [
    (9, 4, 126),
    (9, -1, 0),
    (0, 0, 1),
    (5, 6, 0),
    (35, 17, 4537567650),
])
def test_binomial_values(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_pascal_rule():
    for n in range(1, 41):
        for k in range(-1, n + 2):
            assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)


def test_binomial_rejects_negative_n():
    with pytest.raises(ParameterError):
        binomial(-1, 0)


def test_colex_order_of_pairs_in_four():
    order = [s.elements() for s in enumerate_subsets(SubsetOrdering(4, 2))]
    assert order == [[1, 2], [1, 3], [2, 3], [1, 4], [2, 4], [3, 4]]


@pytest.mark.parametrize("idx,elements", [(0, [1, 2]), (2, [2, 3]), (5, [3, 4])])
def test_unrank(idx, elements):
    assert unrank(SubsetOrdering(4, 2), idx).elements() == elements


@pytest.mark.parametrize("elements,expected", [([1, 2], 0), ([3, 4], 5), ([2, 3], 2)])
def test_rank(elements, expected):
    assert rank(SubsetOrdering(4, 2), Subset.of(elements, 4)) == expected


def test_unrank_out_of_range():
    with pytest.raises(ParameterError):
        unrank(SubsetOrdering(4, 2), 6)
    with pytest.raises(ParameterError):
        unrank(SubsetOrdering(4, 2), -1)


def test_rank_cardinality_mismatch():
    with pytest.raises(ParameterError):
        rank(SubsetOrdering(4, 2), Subset.of([1, 2, 3], 4))


def test_enumerate_small_cases():
    assert [s.elements() for s in enumerate_subsets(SubsetOrdering(3, 1))] == [[1], [2], [3]]
    assert [s.elements() for s in enumerate_subsets(SubsetOrdering(3, 3))] == [[1, 2, 3]]
    first = [s.elements() for s in enumerate_subsets(SubsetOrdering(5, 2))]
    assert len(first) == 10
    assert first[:4] == [[1, 2], [1, 3], [2, 3], [1, 4]]


def test_rank_unrank_are_inverse():
    for n in range(1, 11):
        for i in range(n + 1):
            ordering = SubsetOrdering(n, i)
            subsets = enumerate_subsets(ordering)
            assert len(subsets) == binomial(n, i)
            for idx, subset in enumerate(subsets):
                assert unrank(ordering, idx) == subset
                assert rank(ordering, subset) == idx


def test_enumeration_matches_colex_comparator():
    """Colex compares the largest elements first."""
    for n, i in [(6, 3), (7, 2), (5, 4)]:
        brute = sorted(itertools.combinations(range(1, n + 1), i), key=lambda c: tuple(reversed(c)))
        assert [tuple(s.elements()) for s in enumerate_subsets(SubsetOrdering(n, i))] == brute


def test_enumeration_sizes_up_to_twenty():
    for n in (12, 16, 20):
        for i in (0, 1, n // 2, n):
            assert sum(1 for _ in iter_bits(n, i)) == binomial(n, i)


def test_subset_validation_and_text():
    subset = Subset.of([1, 3, 4], 5)
    assert str(subset) == "{1,3,4}"
    assert subset.to_json() == [1, 3, 4]
    assert subset.cardinality == 3
    assert 3 in subset and 2 not in subset
    assert subset.complement().elements() == [2, 5]
    with pytest.raises(ParameterError):
        Subset(0b1000, 3)
    with pytest.raises(ParameterError):
        Subset(0, 64)


def test_subsets_of_mask_in_colex_order():
    mask = Subset.of([2, 4, 5], 5).bits
    pairs = [Subset(bits, 5).elements() for bits in subsets_of(mask, 2)]
    assert pairs == [[2, 4], [2, 5], [4, 5]]
    assert list(subsets_of(mask, 0)) == [0]


def test_index_map_agrees_with_rank():
    mapping = index_map(7, 3)
    ordering = SubsetOrdering(7, 3)
    for bits, idx in mapping.items():
        assert rank(ordering, Subset(bits, 7)) == idx
