"""
Closed-form spectra of middle-cubes, Johnson graphs and hypercubes.
"""
import logging
from typing import List

from sympy import Poly, symbols, prod

from core.combinatorics import binomial
from core.errors import ParameterError
from models.spectrum import SpectrumTable

logger = logging.getLogger(__name__)

LAMBDA = symbols("lambda")


def middle_multiplicity(k: int, i: int) -> int:
    """Multiplicity of +i (and of -i) in M_{2k+1}: C(n, k+1-i) - C(n, k-i)."""
    n = 2 * k + 1
    return binomial(n, k + 1 - i) - binomial(n, k - i)


def middle_cube_spectrum(k: int) -> SpectrumTable:
    """
    Spectrum of M_{2k+1}: +-i for i = 1..k+1, each with multiplicity C(n,k+1-i) - C(n,k-i).

    Raises:
        ParameterError: If k < 1
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}", source="middle_cube_spectrum")
    pairs = []
    for i in range(1, k + 2):
        multiplicity = middle_multiplicity(k, i)
        pairs.append((i, multiplicity))
        pairs.append((-i, multiplicity))
    return SpectrumTable.from_pairs(pairs)


def johnson_spectrum(n: int, m: int) -> SpectrumTable:
    """
    Spectrum of J(n, m): (m-i)(n-m-i)-i with multiplicity C(n,i) - C(n,i-1), i = 0..m.

    Coinciding eigenvalues for different i are merged.

    Raises:
        ParameterError: Unless 1 <= m <= n
    """
    if not 1 <= m <= n:
        raise ParameterError(f"need 1 <= m <= n, got n={n}, m={m}", source="johnson_spectrum")
    # the formula is stated for m <= n/2; J(n,m) and J(n,n-m) are isomorphic
    e = min(m, n - m)
    pairs = [((e - i) * (n - e - i) - i, binomial(n, i) - binomial(n, i - 1)) for i in range(e + 1)]
    return SpectrumTable.from_pairs(pairs)


def hypercube_spectrum(n: int) -> SpectrumTable:
    """Spectrum of Q_n: n-2i with multiplicity C(n,i), i = 0..n."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}", source="hypercube_spectrum")
    return SpectrumTable.from_pairs((n - 2 * i, binomial(n, i)) for i in range(n + 1))


def squared_spectrum(k: int) -> SpectrumTable:
    """
    Spectrum of M_{2k+1}^2 derived from the Johnson route.

    M^2 is two copies of J(n, k+1) plus (k+1) I, so every Johnson eigenvalue
    shifts by k+1 and its multiplicity doubles.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}", source="squared_spectrum")
    n = 2 * k + 1
    johnson = johnson_spectrum(n, k + 1)
    return SpectrumTable.from_pairs((value + k + 1, 2 * m) for value, m in johnson.items())


def middle_cube_spectrum_via_johnson(k: int) -> SpectrumTable:
    """
    Spectrum of M_{2k+1} recovered from squared_spectrum by bipartite symmetry.

    Each eigenvalue s^2 of M^2 splits into +s and -s with half the multiplicity.
    """
    pairs = []
    for value, m in squared_spectrum(k).items():
        root = _exact_sqrt(value)
        if root is None or root == 0 or m % 2:
            raise ParameterError(f"M^2 eigenvalue {value} with multiplicity {m} does not split "
                                 f"into a symmetric pair", source="middle_cube_spectrum_via_johnson")
        pairs.append((root, m // 2))
        pairs.append((-root, m // 2))
    return SpectrumTable.from_pairs(pairs)


def _exact_sqrt(value: int):
    if value < 0:
        return None
    root = int(value ** 0.5)
    while root * root > value:
        root -= 1
    while (root + 1) * (root + 1) <= value:
        root += 1
    return root if root * root == value else None


def theorem_polynomial(k: int) -> List[int]:
    """
    Coefficients (highest degree first) of prod_{i=1}^{k+1} (x - i)^{m_i} (x + i)^{m_i}.
    """
    table = middle_cube_spectrum(k)
    product = prod((LAMBDA - value) ** m for value, m in table.items())
    return [int(c) for c in Poly(product, LAMBDA).all_coeffs()]


def multiplicity_sequence(k_max: int) -> List[int]:
    """
    For k = 1..k_max, multiplicities of the eigenvalues k+1, k, ..., 1 of M_{2k+1}, concatenated.
    """
    if k_max < 1:
        raise ParameterError(f"k_max must be >= 1, got {k_max}", source="multiplicity_sequence")
    sequence = []
    for k in range(1, k_max + 1):
        sequence.extend(middle_multiplicity(k, i) for i in range(k + 1, 0, -1))
    return sequence


# Prefix quoted alongside the closed form
PUBLISHED_PREFIX = [1, 2, 1, 4, 5, 1, 6, 14, 14]
