"""
Exact binomials and the colexicographic ordering of i-subsets.

Every matrix row/column order and every graph vertex order in the package
comes from this module. A subset of S = {1, ..., n} is a bit mask with bit
j-1 set when element j belongs to it; colex order of equal-size subsets is
then plain numeric order of the masks.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Iterable, Iterator, Sequence

from core.errors import ParameterError

logger = logging.getLogger(__name__)

MAX_GROUND_SET = 63


def binomial(n: int, k: int) -> int:
    """
    Binomial coefficient C(n, k) as an exact Python integer.

    Args:
        n: Ground-set size, n >= 0
        k: Subset size; any integer

    Returns:
        C(n, k), or 0 when k < 0 or k > n
    """
    if n < 0:
        raise ParameterError(f"n must be non-negative, got {n}", source="binomial")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def bits_of(elements: Iterable[int]) -> int:
    """Mask of a collection of 1-based elements."""
    bits = 0
    for element in elements:
        bits |= 1 << (element - 1)
    return bits


def elements_of(bits: int) -> List[int]:
    """Sorted 1-based elements of a mask."""
    result = []
    position = 1
    while bits:
        if bits & 1:
            result.append(position)
        bits >>= 1
        position += 1
    return result


@dataclass(frozen=True, order=False)
class Subset:
    """A subset of {1, ..., n} stored as a bit mask."""
    bits: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND_SET:
            raise ParameterError(f"ground set size must be in 1..{MAX_GROUND_SET}, got {self.n}",
                                 source="Subset")
        if self.bits < 0 or self.bits >> self.n:
            raise ParameterError(f"mask {self.bits:#x} has elements outside 1..{self.n}",
                                 source="Subset")

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> "Subset":
        elements = list(elements)
        for element in elements:
            if not 1 <= element <= n:
                raise ParameterError(f"element {element} outside 1..{n}", source="Subset")
        return cls(bits_of(elements), n)

    @property
    def cardinality(self) -> int:
        return popcount(self.bits)

    def elements(self) -> List[int]:
        return elements_of(self.bits)

    def complement(self) -> "Subset":
        return Subset(((1 << self.n) - 1) ^ self.bits, self.n)

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and bool(self.bits >> (element - 1) & 1)

    def __len__(self) -> int:
        return self.cardinality

    def issubset(self, other: "Subset") -> bool:
        return self.bits & ~other.bits == 0

    def to_json(self) -> List[int]:
        return self.elements()

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements()) + "}"


def colex_key(subset: Subset) -> int:
    """Sort key realising colex order on subsets of one size."""
    return subset.bits


def rank_bits(bits: int) -> int:
    """Colex rank of a mask among the masks of the same popcount."""
    result = 0
    t = 1
    position = 0
    while bits:
        if bits & 1:
            result += binomial(position, t)
            t += 1
        bits >>= 1
        position += 1
    return result


def iter_bits(n: int, i: int) -> Iterator[int]:
    """
    Masks of all i-subsets of {1..n} in colex order (Gosper's hack).

    Args:
        n: Ground-set size
        i: Subset cardinality
    """
    if i < 0 or i > n:
        return
    if i == 0:
        yield 0
        return
    bits = (1 << i) - 1
    limit = 1 << n
    while bits < limit:
        yield bits
        lowest = bits & -bits
        ripple = bits + lowest
        bits = (((ripple ^ bits) >> 2) // lowest) | ripple


@dataclass(frozen=True)
class SubsetOrdering:
    """Colex bijection between 0..C(n,i)-1 and the i-subsets of {1..n}."""
    n: int
    i: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND_SET:
            raise ParameterError(f"ground set size must be in 1..{MAX_GROUND_SET}, got {self.n}",
                                 source="SubsetOrdering")
        if not 0 <= self.i <= self.n:
            raise ParameterError(f"cardinality must be in 0..{self.n}, got {self.i}",
                                 source="SubsetOrdering")

    @property
    def size(self) -> int:
        return binomial(self.n, self.i)

    def __len__(self) -> int:
        return self.size


def unrank(ordering: SubsetOrdering, idx: int) -> Subset:
    """
    The idx-th i-subset in colex order.

    Raises:
        ParameterError: If idx is outside 0..C(n,i)-1
    """
    if not 0 <= idx < ordering.size:
        raise ParameterError(f"index {idx} out of range 0..{ordering.size - 1}", source="unrank")

    bits = 0
    remaining = idx
    upper = ordering.n
    for t in range(ordering.i, 0, -1):
        # largest c < upper with C(c, t) <= remaining
        c = t - 1
        while c + 1 < upper and binomial(c + 1, t) <= remaining:
            c += 1
        bits |= 1 << c
        remaining -= binomial(c, t)
        upper = c
    return Subset(bits, ordering.n)


def rank(ordering: SubsetOrdering, subset: Subset) -> int:
    """
    Colex rank: sum over sorted elements a_1 < ... < a_i of C(a_t - 1, t).

    Raises:
        ParameterError: On cardinality or ground-set mismatch
    """
    if subset.cardinality != ordering.i:
        raise ParameterError(f"subset {subset} has cardinality {subset.cardinality}, "
                             f"ordering expects {ordering.i}", source="rank")
    if subset.bits >> ordering.n:
        raise ParameterError(f"subset {subset} is not inside 1..{ordering.n}", source="rank")
    return rank_bits(subset.bits)


def enumerate_subsets(ordering: SubsetOrdering) -> List[Subset]:
    """All i-subsets of {1..n}, position idx holding unrank(idx)."""
    return [Subset(bits, ordering.n) for bits in iter_bits(ordering.n, ordering.i)]


def index_map(n: int, i: int) -> dict:
    """Mask -> colex index for every i-subset of {1..n}."""
    return {bits: idx for idx, bits in enumerate(iter_bits(n, i))}


def subsets_of(bits: int, size: int) -> Iterator[int]:
    """Masks of the size-element subsets of a mask, in colex order."""
    positions = [p for p in range(bits.bit_length()) if bits >> p & 1]
    for local in iter_bits(len(positions), size):
        mask = 0
        for t, p in enumerate(positions):
            if local >> t & 1:
                mask |= 1 << p
        yield mask


def format_subset_list(subsets: Sequence[Subset]) -> str:
    return "[" + ", ".join(str(s) for s in subsets) + "]"
