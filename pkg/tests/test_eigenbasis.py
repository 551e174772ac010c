from fractions import Fraction

import pytest

from core.combinatorics import Subset, binomial, index_map, subsets_of
from core.errors import CapExceededError, ParameterError
from core.exactla import RationalMatrix, rank
from core.graphs import build_middle_cube
from models.spectrum import IncidenceSpec
from services.certification import verify_block, verify_eigenvector
from services.eigenbasis import (
    constraint_kernel, extension_weight, full_eigenbasis, incidence_matrix, lift_block, sign_flip,
)


def row_sums(m):
    return [sum(row) for row in m.to_rows()]


def test_incidence_matrix_sums():
    m = incidence_matrix(IncidenceSpec(3, 1, 2))
    assert m.shape == (3, 3)
    assert row_sums(m) == [2, 2, 2]
    assert row_sums(m.transpose()) == [2, 2, 2]

    up = incidence_matrix(IncidenceSpec(5, 2, 3))
    assert up.shape == (10, 10)
    assert set(row_sums(up)) == {3}


def test_incidence_matrix_entries_follow_containment():
    n, i, j = 6, 3, 2
    m = incidence_matrix(IncidenceSpec(n, i, j))
    rows = m.to_rows()
    lower = index_map(n, j)
    for bits, r in index_map(n, i).items():
        contained = {lower[sub] for sub in subsets_of(bits, j)}
        assert [c for c, value in enumerate(rows[r]) if value] == sorted(contained)


def test_incidence_matrix_full_rank_example():
    assert rank(incidence_matrix(IncidenceSpec(5, 2, 1))) == 5


def test_incidence_matrix_cap_and_spec_checks():
    with pytest.raises(CapExceededError):
        incidence_matrix(IncidenceSpec(20, 10, 9))
    with pytest.raises(ParameterError):
        IncidenceSpec(5, 2, 2)
    with pytest.raises(ParameterError):
        IncidenceSpec(5, 6, 1)


def test_constraint_kernel_dimensions():
    assert constraint_kernel(5, 2).shape == (5, 10)
    assert constraint_kernel(1, 0).to_rows() == [[1]]

    singletons = constraint_kernel(3, 1)
    assert singletons.shape == (2, 3)
    assert row_sums(singletons) == [0, 0]


def test_constraint_kernel_rows_satisfy_zero_sums():
    n, r = 7, 3
    kernel = constraint_kernel(n, r)
    assert kernel.rows == binomial(n, r) - binomial(n, r - 1)
    index = index_map(n, r)
    for row in kernel.to_rows():
        for subset in index_map(n, r - 1):
            total = sum(row[index[subset | (1 << p)]] for p in range(n) if not subset >> p & 1)
            assert total == 0


def test_constraint_kernel_range():
    with pytest.raises(ParameterError):
        constraint_kernel(5, 3)
    with pytest.raises(ParameterError):
        constraint_kernel(5, -1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_lift_level_zero_is_all_ones(k):
    block = lift_block(k, 0)
    assert block.eigenvalue == k + 1
    assert block.vectors.to_rows() == [[1] * (2 * binomial(2 * k + 1, k))]


def test_lift_block_examples(m3, m5):
    block = lift_block(2, 2)
    assert (block.dimension, block.eigenvalue) == (5, 1)
    assert verify_block(m5, block) == 5

    block = lift_block(1, 1)
    assert (block.dimension, block.eigenvalue) == (2, 1)
    assert verify_block(m3, block) == 2
    assert block.header == "1 1 1 2 6"


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_lift_blocks_are_eigenspaces(k):
    g = build_middle_cube(k)
    for r in range(k + 1):
        block = lift_block(k, r)
        assert block.dimension == block.expected_dimension
        assert verify_block(g, block) == block.dimension


def test_lift_realises_subset_sum_extension():
    k, r = 3, 2
    n = 2 * k + 1
    g = build_middle_cube(k)
    kernel = constraint_kernel(n, r)
    block = lift_block(k, r)
    for b in range(kernel.rows):
        row = kernel.row(b)
        lifted = block.vectors.row(b)
        assert lifted == [extension_weight(row, n, r, g.label_bits[u]) for u in range(g.num_vertices)]


def test_extension_weight_direct():
    row = [Fraction(1), Fraction(-1), Fraction(0)]
    assert extension_weight(row, 3, 1, Subset.of([1, 2], 3).bits) == 0
    assert extension_weight(row, 3, 1, Subset.of([1, 3], 3).bits) == 1
    assert extension_weight([Fraction(5)], 3, 0, Subset.of([2], 3).bits) == 5


def test_sign_flip_of_perron_vector():
    k = 2
    offset = binomial(5, 2)
    flipped = sign_flip(lift_block(k, 0), k)
    assert flipped.eigenvalue == -3
    assert flipped.vectors.to_rows() == [[1] * offset + [-1] * offset]


def test_sign_flip_keeps_rows_and_negates_eigenvalue(m5):
    block = lift_block(2, 1)
    flipped = sign_flip(block, 2)
    assert flipped.dimension == block.dimension
    assert flipped.eigenvalue == -2
    for i in range(flipped.dimension):
        assert verify_eigenvector(m5, flipped.vectors.row(i), -2)
    with pytest.raises(ParameterError):
        sign_flip(block, 3)


def test_full_eigenbasis_block_sizes():
    assert [b.dimension for b in full_eigenbasis(1)] == [1, 2, 2, 1]
    blocks = full_eigenbasis(3)
    assert [b.dimension for b in blocks] == [1, 6, 14, 14, 14, 14, 6, 1]
    assert [b.eigenvalue for b in blocks] == [4, 3, 2, 1, -1, -2, -3, -4]


def test_full_eigenbasis_spans_the_space():
    blocks = full_eigenbasis(2)
    stacked = RationalMatrix.from_rows([b.vectors.row(i) for b in blocks for i in range(b.dimension)])
    assert stacked.shape == (20, 20)
    assert rank(stacked) == 20


def test_full_eigenbasis_workers_keep_order():
    serial = full_eigenbasis(3, workers=1)
    threaded = full_eigenbasis(3, workers=3)
    assert [b.header for b in serial] == [b.header for b in threaded]
    assert all(a.vectors == b.vectors for a, b in zip(serial, threaded))


def test_full_eigenbasis_cap():
    with pytest.raises(CapExceededError):
        full_eigenbasis(3, cap=2)


@pytest.mark.slow
def test_full_eigenbasis_at_k_five():
    g = build_middle_cube(5)
    blocks = full_eigenbasis(5)
    assert sum(b.dimension for b in blocks) == 924
    assert all(verify_block(g, b) == b.dimension for b in blocks)
