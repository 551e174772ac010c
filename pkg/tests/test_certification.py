from fractions import Fraction

import pytest

from core.errors import CapExceededError, ParameterError
from core.exactla import RationalMatrix
from core.graphs import build_middle_cube
from models.spectrum import EigenbasisBlock, SpectrumTable
from services.certification import (
    certify_by_moments, characteristic_polynomial_oracle, check_block_orthogonality, default_rank_pairs,
    lower_block_matches_complement, moment_mismatches, verify_eigenvector, verify_incidence_ranks,
    verify_lemma_identities, verify_m_squared,
)
from services.eigenbasis import full_eigenbasis, lift_block
from services.spectrum import middle_cube_spectrum, theorem_polynomial


def test_verify_eigenvector_on_regular_graph(m5):
    ones = [1] * 20
    assert verify_eigenvector(m5, ones, 3)
    assert not verify_eigenvector(m5, ones, 2)


def test_verify_eigenvector_rejects_degenerate_input(m5):
    assert not verify_eigenvector(m5, [0] * 20, 3)
    assert not verify_eigenvector(m5, [1] * 19, 3)


def test_verify_eigenvector_accepts_rational_scaling(m5):
    row = lift_block(2, 1).vectors.row(0)
    assert verify_eigenvector(m5, [x / 3 for x in row], 2)
    assert verify_eigenvector(m5, [Fraction(-7, 2) * x for x in row], 2)
    assert not verify_eigenvector(m5, [x / 3 for x in row], -2)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_m_squared_identity(k):
    assert verify_m_squared(k)


@pytest.mark.slow
def test_m_squared_identity_at_k_four():
    assert verify_m_squared(4)


def test_m_squared_cap():
    with pytest.raises(CapExceededError):
        verify_m_squared(6)
    with pytest.raises(CapExceededError):
        verify_m_squared(3, cap=2)
    with pytest.raises(ParameterError):
        verify_m_squared(0)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_lower_block_matches_complement(k):
    assert lower_block_matches_complement(k)


def test_moments_on_six_cycle(m3):
    table = middle_cube_spectrum(1)
    assert table.moment(2) == 12
    assert certify_by_moments(m3, table)


def test_moments_negative_control(m5):
    swapped = SpectrumTable.from_pairs([(3, 1), (-3, 1), (2, 5), (-2, 5), (1, 4), (-1, 4)])
    assert swapped.order == 20
    assert not certify_by_moments(m5, swapped)
    assert moment_mismatches(m5, swapped)
    assert not certify_by_moments(m5, middle_cube_spectrum(1))


@pytest.mark.parametrize("k", [4, 5])
def test_moments_certify_larger_middle_cubes(k):
    assert certify_by_moments(build_middle_cube(k), middle_cube_spectrum(k))


@pytest.mark.slow
def test_moments_certify_k_six():
    assert certify_by_moments(build_middle_cube(6), middle_cube_spectrum(6))


def test_oracle_small_graphs(m3, k2):
    assert characteristic_polynomial_oracle(m3) == [1, 0, -6, 0, 9, 0, -4]
    assert characteristic_polynomial_oracle(k2) == [1, 0, -1]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_oracle_matches_closed_form_product(k):
    assert characteristic_polynomial_oracle(build_middle_cube(k)) == theorem_polynomial(k)


def test_oracle_cap():
    with pytest.raises(CapExceededError):
        characteristic_polynomial_oracle(build_middle_cube(4))
    with pytest.raises(CapExceededError):
        characteristic_polynomial_oracle(build_middle_cube(2), cap=10)


def test_default_rank_pairs():
    assert default_rank_pairs(7) == [(1, 0), (2, 1), (3, 2)]
    with_lift = default_rank_pairs(5, include_lift=True)
    assert with_lift[:2] == [(1, 0), (2, 1)]
    assert (0, 2) in with_lift and (0, 3) in with_lift and (1, 3) in with_lift
    assert (2, 2) not in with_lift


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_incidence_matrices_have_full_rank(n):
    results = verify_incidence_ranks(n)
    assert len(results) == (n - 1) // 2
    assert all(found == expected for _, _, found, expected in results)


def test_incidence_ranks_with_lift_pairs():
    results = verify_incidence_ranks(7, include_lift=True)
    assert all(found == expected for _, _, found, expected in results)
    assert verify_incidence_ranks(6, pairs=[(2, 4)]) == [(2, 4, 15, 15)]


@pytest.mark.parametrize("n,r", [(3, 1), (5, 1), (5, 2), (7, 1), (7, 2), (7, 3)])
def test_lemma_identities_hold(n, r):
    report = verify_lemma_identities(n, r, trials=1000, seed=n * 10 + r)
    assert report.passed, report.get_report()
    assert report.trials == 1000 * report.vectors
    assert report.checks["outside"] == report.trials
    assert report.checks["up-layer"] == report.trials


def test_lemma_identities_are_reproducible():
    first = verify_lemma_identities(5, 2, trials=50, seed=3)
    second = verify_lemma_identities(5, 2, trials=50, seed=3)
    assert first.checks == second.checks


def test_lemma_identities_parameter_checks():
    with pytest.raises(ParameterError):
        verify_lemma_identities(5, 0)
    with pytest.raises(ParameterError):
        verify_lemma_identities(5, 3)
    with pytest.raises(ParameterError):
        verify_lemma_identities(5, 1, trials=0)
    with pytest.raises(CapExceededError):
        verify_lemma_identities(15, 1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_blocks_with_distinct_eigenvalues_are_orthogonal(k):
    assert check_block_orthogonality(full_eigenbasis(k)) == 0


def test_orthogonality_counts_overlaps():
    ones = RationalMatrix.from_rows([[1, 1, 0]])
    first = EigenbasisBlock(k=1, r=0, eigenvalue=2, vectors=ones)
    second = EigenbasisBlock(k=1, r=0, eigenvalue=5, vectors=ones)
    same = EigenbasisBlock(k=1, r=0, eigenvalue=2, vectors=ones)
    assert check_block_orthogonality([first, second]) == 1
    assert check_block_orthogonality([first, same]) == 0
