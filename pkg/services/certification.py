"""
Independent certificates for the spectral claims.

Every function returns a plain verdict (bool / counts) and never rounds:
eigenvectors are checked by integer mat-vecs, spectra by exact traces of
adjacency powers, ranks by exact RREF.
"""
import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config import Config
from core.combinatorics import binomial, index_map, popcount, subsets_of
from core.errors import CapExceededError, ParameterError
from core.exactla import matmul, newton_coefficients, rank, sparse_matvec, to_fraction, trace_powers
from core.graphs import SparseGraph, build_johnson, build_middle_cube, complement_map
from core.utils import integral_scale
from models.spectrum import EigenbasisBlock, IncidenceSpec, SpectrumTable
from services.eigenbasis import constraint_kernel, extension_weight, incidence_matrix

logger = logging.getLogger(__name__)

# Largest ground set for which the lemma checks tabulate f on every subset
LEMMA_MAX_N = 13


def verify_eigenvector(g: SparseGraph, v: Sequence, eigenvalue: int) -> bool:
    """
    True iff A v = eigenvalue * v exactly and v is not the zero vector.

    Rational entries are scaled by the lcm of their denominators first, so
    the mat-vec runs on Python integers.
    """
    if len(v) != g.num_vertices:
        logger.warning(f"Vector of length {len(v)} checked against {g.num_vertices} vertices")
        return False
    values = [to_fraction(x) for x in v]
    if not any(values):
        return False

    scale = integral_scale(values)
    scaled = [int(x * scale) for x in values]
    image = sparse_matvec(g, scaled)
    return all(image[u] == eigenvalue * scaled[u] for u in range(g.num_vertices))


def verify_block(g: SparseGraph, block: EigenbasisBlock) -> int:
    """Number of rows of block that are exact eigenvectors for its eigenvalue."""
    return sum(1 for i in range(block.dimension)
               if verify_eigenvector(g, block.vectors.row(i), block.eigenvalue))


def _check_m_squared_cap(k: int, cap: Optional[int]) -> None:
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}", source="verify_m_squared")
    limit = Config.get_int(Config.MAX_K, cap)
    if k > limit:
        raise CapExceededError(f"k={k} exceeds the dense product cap {limit}", source="verify_m_squared")


def lower_block_matches_complement(k: int) -> bool:
    """
    J(2k+1, k) on colex k-subsets equals J(2k+1, k+1) relabelled by complementation.
    """
    n = 2 * k + 1
    lower = build_johnson(n, k)
    upper = build_johnson(n, k + 1)
    mapping = complement_map(k)
    for a in range(lower.num_vertices):
        image = sorted(mapping[b] for b in lower.adjacency[a])
        if tuple(image) != upper.adjacency[mapping[a]]:
            return False
    return True


def verify_m_squared(k: int, cap: Optional[int] = None) -> bool:
    """
    Exact dense check of M^2 = blockdiag(J(n,k), J(n,k+1)) + (k+1) I.

    The lower block is J(n,k) indexed by colex k-subsets; it is additionally
    required to coincide with J(n,k+1) under the complement bijection, which
    is how both diagonal blocks are the same Johnson graph.

    Raises:
        CapExceededError: If k is above the configured cap
    """
    _check_m_squared_cap(k, cap)
    n = 2 * k + 1
    g = build_middle_cube(k)
    adjacency = g.adjacency_matrix()
    square = matmul(adjacency, adjacency)

    offset = binomial(n, k)
    lower = build_johnson(n, k)
    upper = build_johnson(n, k + 1)
    expected: Dict[int, Dict[int, int]] = {}
    for u in range(offset):
        row = {w: 1 for w in lower.adjacency[u]}
        row[u] = k + 1
        expected[u] = row
    for u in range(offset):
        row = {offset + w: 1 for w in upper.adjacency[u]}
        row[offset + u] = k + 1
        expected[offset + u] = row

    identical = square.to_rows() == type(square).from_dict(expected, square.shape).to_rows()
    aligned = lower_block_matches_complement(k)
    logger.info(f"M^2 check for k={k}: product {'matches' if identical else 'differs'}, "
                f"complement alignment {'holds' if aligned else 'fails'}")
    return identical and aligned


def moment_mismatches(g: SparseGraph, t: SpectrumTable) -> List[Tuple[int, int, int]]:
    """
    (p, trace(A^p), claimed moment) for every p in 0..d where the two differ.

    d is the number of distinct claimed eigenvalues.
    """
    traces = trace_powers(g, t.distinct)
    return [(p, traces[p], t.moment(p)) for p in range(t.distinct + 1) if traces[p] != t.moment(p)]


def certify_by_moments(g: SparseGraph, t: SpectrumTable) -> bool:
    """
    True iff trace(A^p) = sum mult(l) l^p for p = 0..d and the multiplicities sum to the order.

    With d distinct claimed eigenvalues the Vandermonde system has a unique
    solution, so a pass pins the spectrum exactly.
    """
    if t.order != g.num_vertices:
        logger.info(f"Spectrum of order {t.order} offered for a graph on {g.num_vertices} vertices")
        return False
    mismatches = moment_mismatches(g, t)
    for p, trace, claimed in mismatches:
        logger.info(f"Moment p={p} differs: trace {trace}, claimed {claimed}")
    return not mismatches


def characteristic_polynomial_oracle(g: SparseGraph, cap: Optional[int] = None) -> List[int]:
    """
    Coefficients of det(xI - A), highest degree first, via Newton's identities.

    Raises:
        CapExceededError: If the graph has more vertices than the oracle cap
    """
    limit = min(Config.get_int(Config.CHARPOLY_MAX_N, cap), Config.HARD_TRACE_MAX_P)
    if g.num_vertices > limit:
        raise CapExceededError(f"{g.num_vertices} vertices exceed the oracle cap {limit}",
                               source="characteristic_polynomial_oracle")
    traces = trace_powers(g, g.num_vertices)
    return newton_coefficients(traces, g.num_vertices)


def default_rank_pairs(n: int, include_lift: bool = False) -> List[Tuple[int, int]]:
    """
    (r, r-1) for 1 <= r <= (n-1)/2; with include_lift also (r, k) and (r, k+1), k = (n-1)/2.
    """
    half = (n - 1) // 2
    pairs = [(r, r - 1) for r in range(1, half + 1)]
    if include_lift:
        for r in range(half + 1):
            for layer in (half, half + 1):
                if r != layer and (r, layer) not in pairs:
                    pairs.append((r, layer))
    return pairs


def verify_incidence_ranks(n: int, pairs: Optional[Iterable[Tuple[int, int]]] = None,
                           include_lift: bool = False) -> List[Tuple[int, int, int, int]]:
    """
    Exact rank of each M_{i,j} next to the full rank min(C(n,i), C(n,j)).

    Returns:
        (i, j, rank, expected) per pair, in request order
    """
    if pairs is None:
        pairs = default_rank_pairs(n, include_lift)
    results = []
    for i, j in pairs:
        spec = IncidenceSpec(n, i, j)
        found = rank(incidence_matrix(spec))
        results.append((i, j, found, spec.full_rank))
        logger.debug(f"rank M_{{{i},{j}}} (n={n}) = {found}, expected {spec.full_rank}")
    return results


@dataclass
class LemmaReport:
    """Counts from verify_lemma_identities; failures are keyed by identity name."""
    n: int
    r: int
    vectors: int = 0
    trials: int = 0
    checks: Counter = field(default_factory=Counter)
    failures: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return self.trials > 0 and not self.failures

    def get_report(self) -> str:
        lines = [f"Lemma identities n={self.n}, r={self.r}: "
                 f"{self.vectors} kernel vectors, {self.trials} trials"]
        for name in sorted(self.checks):
            lines.append(f"  {name}: {self.checks[name]} checked, {self.failures[name]} failed")
        return "\n".join(lines)


def _sum_over_extensions(f: List[Fraction], base: int, element_bit: int, size: int) -> Fraction:
    """Sum of f(R + {i}) over the size-subsets R of base, where element_bit is i's mask."""
    return sum((f[sub | element_bit] for sub in subsets_of(base, size)), Fraction(0))


def verify_lemma_identities(n: int, r: int, trials: int = 1000, seed: int = 0) -> LemmaReport:
    """
    Check the extension identities pointwise on random (A, i) for every kernel row.

    For each row x of constraint_kernel(n, r) the extension f(A) = sum of x
    over the r-subsets of A is tabulated for every A, then per trial:
      insertion   f(A+i) = f(A) + sum_{R in (A, r-1)} f(R+i)           (i not in A)
      deletion    f(A-j) = f(A) - sum_{R in (A-j, r-1)} f(R+j)         (j in A)
      outside     sum_{i not in A} sum_{R in (A, r-1)} f(R+i) = -r f(A)
      inside      sum_{i in A} sum_{R in (A-i, r-1)} f(R+i) = r f(A)
      up-layer    sum_{i not in A} f(A+i) = (n-|A|-r) f(A)
      down-layer  sum_{i in A} f(A-i) = (|A|-r) f(A)

    Args:
        n: Ground-set size
        r: Kernel level, 1 <= r <= (n-1)/2
        trials: Random subsets per kernel row
        seed: Seed for random.Random
    """
    if not 1 <= r <= (n - 1) // 2:
        raise ParameterError(f"need 1 <= r <= (n-1)/2, got n={n}, r={r}", source="verify_lemma_identities")
    if n > LEMMA_MAX_N:
        raise CapExceededError(f"n={n} exceeds the lemma check cap {LEMMA_MAX_N}",
                               source="verify_lemma_identities")
    if trials < 1:
        raise ParameterError(f"trials must be positive, got {trials}", source="verify_lemma_identities")

    rng = random.Random(seed)
    kernel = constraint_kernel(n, r)
    index = index_map(n, r)
    full = (1 << n) - 1
    report = LemmaReport(n=n, r=r, vectors=kernel.rows)

    def record(name: str, ok: bool) -> None:
        report.checks[name] += 1
        if not ok:
            report.failures[name] += 1

    for b in range(kernel.rows):
        row = kernel.row(b)
        f = [extension_weight(row, n, r, bits, index) for bits in range(full + 1)]

        for _ in range(trials):
            a = rng.getrandbits(n)
            size = popcount(a)
            outside = [p for p in range(n) if not a >> p & 1]
            inside = [p for p in range(n) if a >> p & 1]

            if outside:
                i = 1 << rng.choice(outside)
                record("insertion", f[a | i] == f[a] + _sum_over_extensions(f, a, i, r - 1))
            if inside:
                j = 1 << rng.choice(inside)
                record("deletion", f[a ^ j] == f[a] - _sum_over_extensions(f, a ^ j, j, r - 1))

            record("outside", sum((_sum_over_extensions(f, a, 1 << p, r - 1) for p in outside), Fraction(0))
                   == -r * f[a])
            record("inside", sum((_sum_over_extensions(f, a ^ (1 << p), 1 << p, r - 1) for p in inside),
                                 Fraction(0)) == r * f[a])
            record("up-layer", sum((f[a | (1 << p)] for p in outside), Fraction(0)) == (n - size - r) * f[a])
            record("down-layer", sum((f[a ^ (1 << p)] for p in inside), Fraction(0)) == (size - r) * f[a])
            report.trials += 1

    logger.info(f"Lemma identities n={n}, r={r}: {report.trials} trials, "
                f"{sum(report.failures.values())} failures")
    return report


def check_block_orthogonality(blocks: Sequence[EigenbasisBlock]) -> int:
    """
    Number of (row, row) pairs from blocks with distinct eigenvalues whose dot product is non-zero.
    """
    nonzero = 0
    for first, second in combinations(blocks, 2):
        if first.eigenvalue == second.eigenvalue:
            continue
        product = matmul(first.vectors, second.vectors.transpose())
        nonzero += sum(1 for row in product.nonzero().values() for value in row.values() if value != 0)
    return nonzero
