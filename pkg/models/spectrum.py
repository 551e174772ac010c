"""
Value types for spectra and eigenbases.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

from core.combinatorics import binomial
from core.errors import ParameterError
from core.exactla import RationalMatrix


@dataclass(frozen=True)
class SpectrumTable:
    """
    Eigenvalue -> multiplicity map of a graph of the given order.

    Attributes:
        entries: Exact integer eigenvalue -> positive multiplicity
        order: Number of vertices; equals the sum of multiplicities
    """
    entries: Dict[int, int]
    order: int

    def __post_init__(self):
        if any(m <= 0 for m in self.entries.values()):
            raise ParameterError("multiplicities must be positive", source="SpectrumTable")
        total = sum(self.entries.values())
        if total != self.order:
            raise ParameterError(f"multiplicities sum to {total}, order is {self.order}",
                                 source="SpectrumTable")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "SpectrumTable":
        """Merge (eigenvalue, multiplicity) pairs, summing coinciding eigenvalues and dropping zeros."""
        merged: Dict[int, int] = {}
        for value, multiplicity in pairs:
            if multiplicity:
                merged[value] = merged.get(value, 0) + multiplicity
        return cls(dict(sorted(merged.items())), sum(merged.values()))

    def multiplicity(self, value: int) -> int:
        return self.entries.get(value, 0)

    @property
    def eigenvalues(self) -> List[int]:
        return sorted(self.entries)

    @property
    def distinct(self) -> int:
        return len(self.entries)

    def is_symmetric(self) -> bool:
        return all(self.multiplicity(-value) == m for value, m in self.entries.items())

    def moment(self, p: int) -> int:
        """Sum of mult(l) * l^p; the trace of A^p if this is A's spectrum."""
        return sum(m * value ** p for value, m in self.entries.items())

    def items(self) -> List[Tuple[int, int]]:
        return [(value, self.entries[value]) for value in self.eigenvalues]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "eigenvalues": [{"value": value, "multiplicity": str(m)} for value, m in self.items()],
        }


@dataclass(frozen=True)
class IncidenceSpec:
    """Which containment matrix M_{i,j} over the subsets of {1..n}."""
    n: int
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ParameterError(f"i and j must differ, both are {self.i}", source="IncidenceSpec")
        if not (0 <= self.i <= self.n and 0 <= self.j <= self.n):
            raise ParameterError(f"need 0 <= i, j <= n, got n={self.n}, i={self.i}, j={self.j}",
                                 source="IncidenceSpec")

    @property
    def shape(self) -> Tuple[int, int]:
        return binomial(self.n, self.i), binomial(self.n, self.j)

    @property
    def full_rank(self) -> int:
        return min(self.shape)


@dataclass(frozen=True)
class EigenbasisBlock:
    """
    Rows spanning one eigenspace of M_{2k+1}.

    Attributes:
        k: Half-dimension, n = 2k+1
        r: Level of the constraint kernel the rows were lifted from
        eigenvalue: k+1-r, or its negative after a sign flip
        vectors: One eigenvector per row, length 2*C(n,k), lower layer first
    """
    k: int
    r: int
    eigenvalue: int
    vectors: RationalMatrix = field(compare=False)

    @property
    def dimension(self) -> int:
        return self.vectors.rows

    @property
    def expected_dimension(self) -> int:
        n = 2 * self.k + 1
        return binomial(n, self.r) - binomial(n, self.r - 1)

    @property
    def header(self) -> str:
        return f"{self.k} {self.r} {self.eigenvalue} {self.vectors.rows} {self.vectors.cols}"
