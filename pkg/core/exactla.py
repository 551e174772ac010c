"""
Exact linear algebra over the rationals and integers.

RationalMatrix and IntMatrix wrap sympy's DomainMatrix (QQ / ZZ, sparse
format). Public entries are fractions.Fraction / int so callers never see
domain elements. Every result here is an exact equality; nothing is rounded.
"""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple, Union, Dict, TYPE_CHECKING

import numpy as np
from scipy import sparse
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from config import Config
from core.errors import DimensionError, ParameterError, MidspecError

if TYPE_CHECKING:
    from core.graphs import SparseGraph

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]

# Above this many start vertices, trace powers are computed in column blocks
TRACE_BLOCK_SIZE = 256
INT64_SAFE_BOUND = 1 << 62


def to_fraction(value) -> Fraction:
    """Domain element (or int / Fraction / str) -> Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))


def _to_qq(value):
    value = to_fraction(value)
    return QQ(value.numerator, value.denominator)


class _ExactMatrix:
    """Shared behaviour of RationalMatrix and IntMatrix."""
    domain = None

    def __init__(self, dm: DomainMatrix):
        self._dm = dm.convert_to(self.domain).to_sparse()

    @classmethod
    def from_dict(cls, entries: Dict[int, Dict[int, Number]], shape: Tuple[int, int]):
        """Build from {row: {col: value}} with zero entries omitted."""
        convert = cls._convert
        sdm = {}
        for i, row in entries.items():
            converted = {j: convert(v) for j, v in row.items() if v != 0}
            if converted:
                sdm[i] = converted
        return cls(DomainMatrix(sdm, shape, cls.domain))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]], cols: int = None):
        """Build from a dense list of rows; cols is required when rows is empty."""
        rows = [list(row) for row in rows]
        if cols is None:
            if not rows:
                raise DimensionError("cols must be given for an empty row list", source="from_rows")
            cols = len(rows[0])
        for idx, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionError(f"row {idx} has {len(row)} entries, expected {cols}",
                                     source="from_rows")
        entries = {i: {j: v for j, v in enumerate(row)} for i, row in enumerate(rows)}
        return cls.from_dict(entries, (len(rows), cols))

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(DomainMatrix({}, (rows, cols), cls.domain))

    @classmethod
    def identity(cls, size: int):
        return cls.from_dict({i: {i: 1} for i in range(size)}, (size, size))

    @property
    def dm(self) -> DomainMatrix:
        return self._dm

    @property
    def shape(self) -> Tuple[int, int]:
        return tuple(self._dm.shape)

    @property
    def rows(self) -> int:
        return self._dm.shape[0]

    @property
    def cols(self) -> int:
        return self._dm.shape[1]

    def nonzero(self) -> Dict[int, Dict[int, object]]:
        """Sparse view {row: {col: domain element}}."""
        return self._dm.rep

    def to_rows(self) -> List[List]:
        out = [[self._zero()] * self.cols for _ in range(self.rows)]
        for i, row in self.nonzero().items():
            for j, value in row.items():
                out[i][j] = self._convert_out(value)
        return out

    def row(self, i: int) -> List:
        if not 0 <= i < self.rows:
            raise ParameterError(f"row {i} out of range 0..{self.rows - 1}", source="row")
        out = [self._zero()] * self.cols
        for j, value in self.nonzero().get(i, {}).items():
            out[j] = self._convert_out(value)
        return out

    def transpose(self):
        return type(self)(self._dm.transpose())

    def hstack(self, other: "_ExactMatrix"):
        if self.rows != other.rows:
            raise DimensionError(f"cannot stack {self.shape} beside {other.shape}", source="hstack")
        if self.domain != other.domain:
            return RationalMatrix(self._dm).hstack(RationalMatrix(other._dm))
        if other.cols == 0:
            return type(self)(self._dm)
        if self.cols == 0:
            return type(self)(other._dm)
        return type(self)(self._dm.hstack(other._dm))

    def __eq__(self, other) -> bool:
        if not isinstance(other, _ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return self.to_rows() == other.to_rows()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.rows}x{self.cols})"


class RationalMatrix(_ExactMatrix):
    """Dense-semantics rational matrix; entries are Fraction."""
    domain = QQ

    @staticmethod
    def _convert(value):
        return _to_qq(value)

    @staticmethod
    def _convert_out(value) -> Fraction:
        return to_fraction(value)

    @staticmethod
    def _zero() -> Fraction:
        return Fraction(0)


class IntMatrix(_ExactMatrix):
    """Integer matrix; entries are Python int."""
    domain = ZZ

    @staticmethod
    def _convert(value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ParameterError(f"{value} is not an integer", source="IntMatrix")
            value = value.numerator
        return ZZ(int(value))

    @staticmethod
    def _convert_out(value) -> int:
        return int(value)

    @staticmethod
    def _zero() -> int:
        return 0

    def to_rational(self) -> RationalMatrix:
        return RationalMatrix(self._dm)


def rref(m: _ExactMatrix) -> Tuple[RationalMatrix, int, List[int]]:
    """
    Reduced row-echelon form over QQ.

    The RREF of a matrix is unique, so the result is independent of the
    elimination order sympy uses internally.

    Returns:
        (rref matrix, rank, pivot columns)
    """
    q = m.to_rational() if isinstance(m, IntMatrix) else m
    if q.rows == 0 or q.cols == 0:
        return RationalMatrix(q.dm), 0, []
    reduced, pivots = q.dm.rref()
    pivots = [int(p) for p in pivots]
    return RationalMatrix(reduced), len(pivots), pivots


def rank(m: _ExactMatrix) -> int:
    return rref(m)[1]


def right_kernel_basis(m: _ExactMatrix) -> RationalMatrix:
    """
    Canonical basis of {x : m x^T = 0}, one basis vector per row.

    For each free column f (in increasing order) the basis row has x_f = 1,
    the other free coordinates 0, and pivot coordinates read off the RREF.
    """
    reduced, _, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]

    # pivot row i has its leading 1 in column pivots[i]
    rows = reduced.nonzero()
    basis: Dict[int, Dict[int, Fraction]] = {}
    for b, f in enumerate(free):
        vector = {f: Fraction(1)}
        for i, p in enumerate(pivots):
            value = rows.get(i, {}).get(f)
            if value is not None and value != 0:
                vector[p] = -to_fraction(value)
        basis[b] = vector

    return RationalMatrix.from_dict(basis, (len(free), m.cols))


def matmul(a: _ExactMatrix, b: _ExactMatrix) -> _ExactMatrix:
    """
    Exact product a @ b. IntMatrix times IntMatrix stays integral.

    Raises:
        DimensionError: If cols(a) != rows(b)
    """
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}", source="matmul")
    if isinstance(a, IntMatrix) and isinstance(b, IntMatrix):
        return IntMatrix(a.dm.matmul(b.dm))
    left = a.to_rational() if isinstance(a, IntMatrix) else a
    right = b.to_rational() if isinstance(b, IntMatrix) else b
    return RationalMatrix(left.dm.matmul(right.dm))


def sparse_matvec(g: "SparseGraph", v: Sequence[Number]) -> List[Number]:
    """
    (A v)_u = sum of v_w over the neighbours w of u.

    Raises:
        DimensionError: If len(v) != number of vertices
    """
    if len(v) != g.num_vertices:
        raise DimensionError(f"vector has length {len(v)}, graph has {g.num_vertices} vertices",
                             source="sparse_matvec")
    return [sum((v[w] for w in neighbours), 0) for neighbours in g.adjacency]


def _walk_bound(g: "SparseGraph", p_max: int) -> int:
    max_degree = max((len(nbrs) for nbrs in g.adjacency), default=0)
    return g.num_vertices * max_degree ** p_max


def _trace_powers_int64(g: "SparseGraph", p_max: int) -> List[int]:
    size = g.num_vertices
    row_idx = [u for u, nbrs in enumerate(g.adjacency) for _ in nbrs]
    col_idx = [w for nbrs in g.adjacency for w in nbrs]
    data = np.ones(len(col_idx), dtype=np.int64)
    adjacency = sparse.csr_matrix((data, (row_idx, col_idx)), shape=(size, size), dtype=np.int64)

    traces = [0] * (p_max + 1)
    traces[0] = size
    for start in range(0, size, TRACE_BLOCK_SIZE):
        stop = min(start + TRACE_BLOCK_SIZE, size)
        width = stop - start
        block = np.zeros((size, width), dtype=np.int64)
        block[np.arange(start, stop), np.arange(width)] = 1
        for p in range(1, p_max + 1):
            block = adjacency @ block
            traces[p] += int(block[np.arange(start, stop), np.arange(width)].sum())
    return traces


def _trace_powers_exact(g: "SparseGraph", p_max: int) -> List[int]:
    traces = [0] * (p_max + 1)
    traces[0] = g.num_vertices
    for u in range(g.num_vertices):
        vector = [0] * g.num_vertices
        vector[u] = 1
        for p in range(1, p_max + 1):
            vector = sparse_matvec(g, vector)
            traces[p] += vector[u]
    return traces


def trace_powers(g: "SparseGraph", p_max: int) -> List[int]:
    """
    trace(A^p) for p = 0..p_max, as exact Python integers.

    Computed as sum over u of <e_u, A^p e_u>. When N * maxdeg^p_max fits in
    62 bits no intermediate walk count can overflow int64, and the columns
    e_u are pushed through scipy in blocks; otherwise Python integers are used.
    """
    if p_max < 0 or p_max > Config.HARD_TRACE_MAX_P:
        raise ParameterError(f"power must be in 0..{Config.HARD_TRACE_MAX_P}, got {p_max}",
                             source="trace_power")
    if g.num_vertices == 0:
        return [0] * (p_max + 1)
    if _walk_bound(g, p_max) < INT64_SAFE_BOUND:
        return _trace_powers_int64(g, p_max)
    logger.debug(f"Walk counts may exceed int64 at p={p_max}; using exact integers")
    return _trace_powers_exact(g, p_max)


def trace_power(g: "SparseGraph", p: int) -> int:
    """Exact trace of A^p."""
    return trace_powers(g, p)[p]


def newton_coefficients(power_sums: Sequence[int], order: int) -> List[int]:
    """
    Coefficients of det(xI - A), highest degree first, from power sums.

    Args:
        power_sums: trace(A^p) indexed by p, for at least p = 0..order
        order: Matrix size

    Returns:
        [1, c_1, ..., c_order]
    """
    if len(power_sums) < order + 1:
        raise DimensionError(f"need power sums up to p={order}, got {len(power_sums) - 1}",
                             source="newton_coefficients")
    coefficients = [1]
    for m in range(1, order + 1):
        total = sum(coefficients[m - i] * power_sums[i] for i in range(1, m + 1))
        quotient, remainder = divmod(-total, m)
        if remainder:
            raise MidspecError(f"non-integral coefficient at degree {order - m}",
                               source="newton_coefficients")
        coefficients.append(quotient)
    return coefficients


def format_entry(value: Number) -> str:
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_matrix_text(m: _ExactMatrix) -> str:
    """'rows cols' header, then one space-separated row per line."""
    lines = [f"{m.rows} {m.cols}"]
    for row in m.to_rows():
        lines.append(" ".join(format_entry(value) for value in row))
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> RationalMatrix:
    """Inverse of format_matrix_text."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParameterError("empty matrix text", source="parse_matrix_text")
    try:
        rows, cols = (int(x) for x in lines[0].split())
    except ValueError:
        raise ParameterError(f"bad header {lines[0]!r}", source="parse_matrix_text")
    body = lines[1:]
    if len(body) != rows:
        raise DimensionError(f"header says {rows} rows, found {len(body)}", source="parse_matrix_text")
    parsed = [[Fraction(token) for token in line.split()] for line in body]
    return RationalMatrix.from_rows(parsed, cols=cols)
