import pytest

from core.combinatorics import binomial
from core.errors import ParameterError
from core.graphs import build_hypercube, build_johnson, build_middle_cube
from models.spectrum import SpectrumTable
from services.certification import certify_by_moments
from services.spectrum import (
    PUBLISHED_PREFIX, hypercube_spectrum, johnson_spectrum, middle_cube_spectrum,
    middle_cube_spectrum_via_johnson, middle_multiplicity, multiplicity_sequence, squared_spectrum,
    theorem_polynomial,
)


def symmetric(positive):
    entries = {}
    for value, m in positive.items():
        entries[value] = m
        entries[-value] = m
    return dict(sorted(entries.items()))


MIDDLE_CUBE_ROWS = {
    1: symmetric({2: 1, 1: 2}),
    2: symmetric({3: 1, 2: 4, 1: 5}),
    3: symmetric({4: 1, 3: 6, 2: 14, 1: 14}),
    4: symmetric({5: 1, 4: 8, 3: 27, 2: 48, 1: 42}),
}


@pytest.mark.parametrize("k", sorted(MIDDLE_CUBE_ROWS))
def test_middle_cube_spectrum_rows(k):
    table = middle_cube_spectrum(k)
    assert table.entries == MIDDLE_CUBE_ROWS[k]
    assert table.order == 2 * binomial(2 * k + 1, k)


@pytest.mark.parametrize("k", range(1, 13))
def test_middle_cube_spectrum_is_symmetric(k):
    table = middle_cube_spectrum(k)
    assert table.is_symmetric()
    assert table.distinct == 2 * (k + 1)
    assert table.moment(1) == 0


def test_middle_cube_spectrum_rejects_zero():
    with pytest.raises(ParameterError):
        middle_cube_spectrum(0)


def test_johnson_spectrum_examples():
    assert johnson_spectrum(5, 2).entries == {-2: 5, 1: 4, 6: 1}
    assert johnson_spectrum(7, 3).entries == {-3: 14, 0: 14, 5: 6, 12: 1}
    for n in range(2, 9):
        assert johnson_spectrum(n, 1).entries == {-1: n - 1, n - 1: 1}


def test_johnson_spectrum_is_complement_symmetric():
    for n in range(2, 10):
        for m in range(1, n):
            assert johnson_spectrum(n, m) == johnson_spectrum(n, n - m)


def test_johnson_spectrum_parameter_check():
    with pytest.raises(ParameterError):
        johnson_spectrum(3, 0)
    with pytest.raises(ParameterError):
        johnson_spectrum(3, 4)


def test_coinciding_johnson_eigenvalues_merge():
    table = SpectrumTable.from_pairs([(1, 2), (1, 3), (0, 0)])
    assert table.entries == {1: 5}
    assert table.order == 5


def test_spectrum_table_rejects_bad_order():
    with pytest.raises(ParameterError):
        SpectrumTable({1: 2}, 3)
    with pytest.raises(ParameterError):
        SpectrumTable({1: 0}, 0)


def test_spectrum_json_uses_string_multiplicities():
    assert middle_cube_spectrum(1).to_json() == {
        "order": 6,
        "eigenvalues": [
            {"value": -2, "multiplicity": "1"},
            {"value": -1, "multiplicity": "2"},
            {"value": 1, "multiplicity": "2"},
            {"value": 2, "multiplicity": "1"},
        ],
    }


def test_hypercube_spectrum():
    assert hypercube_spectrum(3).entries == {-3: 1, -1: 3, 1: 3, 3: 1}
    assert hypercube_spectrum(10).order == 1024


def test_squared_spectrum():
    assert squared_spectrum(1).entries == {1: 4, 4: 2}
    for k in range(1, 8):
        squares = SpectrumTable.from_pairs((value * value, m) for value, m in middle_cube_spectrum(k).items())
        assert squared_spectrum(k) == squares


@pytest.mark.parametrize("k", range(1, 11))
def test_first_proof_route_agrees_with_closed_form(k):
    assert middle_cube_spectrum_via_johnson(k) == middle_cube_spectrum(k)


def test_theorem_polynomial():
    assert theorem_polynomial(1) == [1, 0, -6, 0, 9, 0, -4]
    coefficients = theorem_polynomial(2)
    assert len(coefficients) == 21
    assert coefficients[0] == 1
    assert sum(coefficients) == 0


def test_multiplicity_sequence_prefix():
    assert multiplicity_sequence(3) == [1, 2, 1, 4, 5, 1, 6, 14, 14]
    assert multiplicity_sequence(3) == PUBLISHED_PREFIX


def test_multiplicity_sequence_groups():
    sequence = multiplicity_sequence(8)
    start = 0
    for k in range(1, 9):
        group = sequence[start:start + k + 1]
        assert group[0] == 1
        assert sum(group) == binomial(2 * k + 1, k)
        assert group == [middle_multiplicity(k, i) for i in range(k + 1, 0, -1)]
        start += k + 1
    assert start == len(sequence)
    with pytest.raises(ParameterError):
        multiplicity_sequence(0)


@pytest.mark.parametrize("n", range(1, 11))
def test_hypercube_spectrum_certified_by_moments(n):
    assert certify_by_moments(build_hypercube(n), hypercube_spectrum(n))


@pytest.mark.parametrize("n,m", [(n, m) for n in range(2, 9) for m in range(1, n // 2 + 1)])
def test_johnson_spectrum_certified_by_moments(n, m):
    assert certify_by_moments(build_johnson(n, m), johnson_spectrum(n, m))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_middle_cube_spectrum_certified_by_moments(k):
    assert certify_by_moments(build_middle_cube(k), middle_cube_spectrum(k))
