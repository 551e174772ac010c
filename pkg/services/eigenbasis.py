"""
Constructive eigenbasis of the middle-cube.

For each level r = 0..k a weight function on r-subsets that sums to zero
around every (r-1)-subset is extended to every layer vertex A by summing it
over the r-subsets of A. The extended vectors span the eigenspace of
k+1-r; negating the upper layer gives the eigenspace of -(k+1-r).
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from config import Config
from core.combinatorics import binomial, iter_bits, index_map, subsets_of
from core.errors import ParameterError, CapExceededError, MidspecError
from core.exactla import IntMatrix, RationalMatrix, right_kernel_basis, matmul, to_fraction
from models.spectrum import EigenbasisBlock, IncidenceSpec

logger = logging.getLogger(__name__)

INCIDENCE_MAX_ENTRIES = 4_000_000


def incidence_matrix(spec: IncidenceSpec) -> IntMatrix:
    """
    M_{i,j}: C(n,i) x C(n,j) 0/1 matrix, entry 1 when one subset contains the other.

    Rows and columns follow colex order.

    Raises:
        CapExceededError: If the matrix would have more than INCIDENCE_MAX_ENTRIES entries
    """
    rows, cols = spec.shape
    if rows * cols > INCIDENCE_MAX_ENTRIES:
        raise CapExceededError(f"M_{{{spec.i},{spec.j}}} for n={spec.n} is {rows}x{cols}",
                               source="incidence_matrix")

    n, i, j = spec.n, spec.i, spec.j
    full = (1 << n) - 1
    col_index = index_map(n, j)
    entries: Dict[int, Dict[int, int]] = {}
    for row, bits in enumerate(iter_bits(n, i)):
        if i < j:
            related = (bits | extra for extra in subsets_of(full ^ bits, j - i))
        else:
            related = subsets_of(bits, j)
        entries[row] = {col_index[other]: 1 for other in related}
    return IntMatrix.from_dict(entries, (rows, cols))


def _layer_matrix(n: int, r: int, layer: int) -> IntMatrix:
    """Containment of r-subsets in layer-subsets, with the identity when r == layer."""
    if r == layer:
        return IntMatrix.identity(binomial(n, r))
    return incidence_matrix(IncidenceSpec(n, r, layer))


def constraint_kernel(n: int, r: int) -> RationalMatrix:
    """
    Basis (rows) of the weightings x of r-subsets with x . M_{r,r-1} = 0.

    Coordinate idx is the weight of the idx-th r-subset in colex order. For
    r = 0 there are no constraints and the basis is the single row (1).

    Raises:
        ParameterError: Unless 0 <= r <= (n-1)/2
    """
    if n < 1 or not 0 <= r <= (n - 1) // 2:
        raise ParameterError(f"need 0 <= r <= (n-1)/2, got n={n}, r={r}", source="constraint_kernel")
    if r == 0:
        return RationalMatrix.from_rows([[1]])

    constraints = incidence_matrix(IncidenceSpec(n, r, r - 1))
    basis = right_kernel_basis(constraints.transpose())

    expected = binomial(n, r) - binomial(n, r - 1)
    if basis.rows != expected:
        raise MidspecError(f"kernel has dimension {basis.rows}, expected {expected}",
                           source="constraint_kernel")
    return basis


def _check_k_r(k: int, r: int, source: str) -> None:
    if k < 1 or not 0 <= r <= k:
        raise ParameterError(f"need k >= 1 and 0 <= r <= k, got k={k}, r={r}", source=source)


def lift_block(k: int, r: int) -> EigenbasisBlock:
    """
    Lift the level-r constraint kernel to M_{2k+1}: kernel x [M_{r,k} | M_{r,k+1}].

    The rows are eigenvectors for k+1-r; the lift is injective, so the row
    count stays C(n,r) - C(n,r-1).
    """
    _check_k_r(k, r, "lift_block")
    n = 2 * k + 1
    kernel = constraint_kernel(n, r)
    lift = _layer_matrix(n, r, k).hstack(_layer_matrix(n, r, k + 1))
    vectors = matmul(kernel, lift)

    if vectors.rows != kernel.rows:
        raise MidspecError(f"lift changed row count {kernel.rows} -> {vectors.rows}", source="lift_block")
    logger.info(f"Lifted level r={r} for k={k}: {vectors.rows} vectors for eigenvalue {k + 1 - r}")
    return EigenbasisBlock(k=k, r=r, eigenvalue=k + 1 - r, vectors=vectors)


def sign_flip(block: EigenbasisBlock, k: int) -> EigenbasisBlock:
    """Negate the upper-layer coordinates, mapping eigenvalue l to -l."""
    if block.k != k:
        raise ParameterError(f"block belongs to k={block.k}, not k={k}", source="sign_flip")
    offset = binomial(2 * k + 1, k)
    flipped = {
        i: {j: (-to_fraction(value) if j >= offset else to_fraction(value)) for j, value in row.items()}
        for i, row in block.vectors.nonzero().items()
    }
    vectors = RationalMatrix.from_dict(flipped, block.vectors.shape)
    return EigenbasisBlock(k=k, r=block.r, eigenvalue=-block.eigenvalue, vectors=vectors)


def full_eigenbasis(k: int, cap: Optional[int] = None, workers: Optional[int] = None) -> List[EigenbasisBlock]:
    """
    All 2(k+1) blocks, ordered by eigenvalue k+1, k, ..., 1, -1, ..., -(k+1).

    Args:
        k: Half-dimension
        cap: Override of the configured eigenbasis cap on k
        workers: Threads used to lift the levels; results keep level order

    Raises:
        CapExceededError: If k is above the cap
    """
    limit = Config.get_int(Config.MAX_K, cap)
    if k > limit:
        raise CapExceededError(f"k={k} exceeds the eigenbasis cap {limit}", source="full_eigenbasis")
    _check_k_r(k, 0, "full_eigenbasis")

    workers = Config.get_int(Config.WORKERS, workers)
    levels = range(k + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            positive = list(pool.map(lambda r: lift_block(k, r), levels))
    else:
        positive = [lift_block(k, r) for r in levels]

    negative = [sign_flip(block, k) for block in reversed(positive)]
    return positive + negative


def extension_weight(row: Sequence[Fraction], n: int, r: int, bits: int,
                     index: Optional[Dict[int, int]] = None) -> Fraction:
    """
    Weight of an arbitrary subset A: the sum of the level-r weights over the r-subsets of A.

    Args:
        row: Level-r weights in colex order
        n: Ground-set size
        r: Level
        bits: Mask of A
        index: Optional precomputed colex index of r-subsets
    """
    if index is None:
        index = index_map(n, r)
    return sum((row[index[sub]] for sub in subsets_of(bits, r)), Fraction(0))
