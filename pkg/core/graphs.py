"""
Generators for hypercubes, middle-cubes and Johnson graphs, plus structural validation.

Vertices inside a subset layer are always in colex order; the middle-cube
puts its k-subsets first and its (k+1)-subsets second.
"""
import bisect
import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Any

import networkx as nx

from config import Config
from core.combinatorics import Subset, binomial, iter_bits, index_map, popcount, elements_of
from core.errors import ParameterError, CapExceededError, DimensionError
from core.exactla import IntMatrix

logger = logging.getLogger(__name__)

JOHNSON_MAX_VERTICES = 200_000


@dataclass(frozen=True)
class SparseGraph:
    """
    Simple undirected graph stored as sorted neighbour tuples.

    Attributes:
        num_vertices: Vertex count; vertices are 0..num_vertices-1
        adjacency: Sorted neighbour indices per vertex
        family: "hypercube", "middle", "johnson" or "custom"
        params: Generator parameters, e.g. {"k": 2}
        label_bits: Optional subset mask per vertex
        ground_size: n of the ground set the labels live in
        bipartition: Optional 0/1 colour per vertex
    """
    num_vertices: int
    adjacency: Tuple[Tuple[int, ...], ...]
    family: str = "custom"
    params: Dict[str, int] = field(default_factory=dict)
    label_bits: Optional[Sequence[int]] = None
    ground_size: Optional[int] = None
    bipartition: Optional[Sequence[int]] = None

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Sequence[Tuple[int, int]], **kwargs) -> "SparseGraph":
        neighbours = [set() for _ in range(num_vertices)]
        for u, v in edges:
            if u == v:
                raise ParameterError(f"self-loop at {u}", source="SparseGraph.from_edges")
            neighbours[u].add(v)
            neighbours[v].add(u)
        return cls(num_vertices, tuple(tuple(sorted(s)) for s in neighbours), **kwargs)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        pos = bisect.bisect_left(nbrs, v)
        return pos < len(nbrs) and nbrs[pos] == v

    def edges(self) -> List[Tuple[int, int]]:
        """Sorted (u, v) pairs with u < v."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def label(self, u: int) -> Optional[Subset]:
        if self.label_bits is None:
            return None
        return Subset(self.label_bits[u], self.ground_size)

    def adjacency_matrix(self) -> IntMatrix:
        entries = {u: {v: 1 for v in nbrs} for u, nbrs in enumerate(self.adjacency) if nbrs}
        return IntMatrix.from_dict(entries, (self.num_vertices, self.num_vertices))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.num_vertices))
        graph.add_edges_from(self.edges())
        if self.label_bits is not None:
            for u in range(self.num_vertices):
                graph.nodes[u]["subset"] = tuple(elements_of(self.label_bits[u]))
        return graph


@dataclass
class ValidationReport:
    num_vertices: int
    num_edges: int
    degree_histogram: Dict[int, int]
    symmetric: bool
    loop_free: bool
    duplicate_free: bool
    components: int
    bipartite: bool
    bipartition_respected: Optional[bool] = None
    networkx_agrees: Optional[bool] = None

    @property
    def regular_degree(self) -> Optional[int]:
        if len(self.degree_histogram) == 1:
            return next(iter(self.degree_histogram))
        if self.num_vertices == 0:
            return 0
        return None

    @property
    def connected(self) -> bool:
        return self.components <= 1

    @property
    def well_formed(self) -> bool:
        return self.symmetric and self.loop_free and self.duplicate_free

    def summary(self) -> str:
        regular = f"regular({self.regular_degree})" if self.regular_degree is not None else "irregular"
        connected = "connected" if self.connected else f"{self.components} components"
        bipartite = "bipartite" if self.bipartite else "NOT bipartite"
        return f"{regular}, {connected}, {bipartite}"


def _check_middle_k(k: int, cap: Optional[int]) -> None:
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}", source="build_middle_cube")
    limit = min(Config.get_int(Config.GRAPH_MAX_K, cap), Config.HARD_GRAPH_MAX_K)
    if k > limit:
        raise CapExceededError(f"k={k} exceeds the middle-cube cap {limit} "
                               f"({2 * binomial(2 * k + 1, k)} vertices)", source="build_middle_cube")


def build_hypercube(n: int) -> SparseGraph:
    """
    Q_n: 2^n vertices indexed by binary value, adjacent when they differ in one bit.

    Raises:
        ParameterError: If n is outside 1..24
    """
    if not 1 <= n <= Config.HARD_HYPERCUBE_MAX_N:
        raise ParameterError(f"n must be in 1..{Config.HARD_HYPERCUBE_MAX_N}, got {n}",
                             source="build_hypercube")
    size = 1 << n
    adjacency = tuple(tuple(sorted(u ^ (1 << b) for b in range(n))) for u in range(size))
    parity = [popcount(u) & 1 for u in range(size)]
    logger.debug(f"Built Q_{n}: {size} vertices")
    return SparseGraph(size, adjacency, family="hypercube", params={"n": n},
                       label_bits=range(size), ground_size=n, bipartition=parity)


def build_middle_cube(k: int, cap: Optional[int] = None) -> SparseGraph:
    """
    M_{2k+1}: k-subsets (indices 0..C(n,k)-1) and (k+1)-subsets of {1..2k+1},
    adjacent by inclusion.

    Args:
        k: Half-dimension, n = 2k+1
        cap: Optional override of the configured generation cap

    Raises:
        ParameterError: If k < 1
        CapExceededError: If k is above the cap
    """
    _check_middle_k(k, cap)
    n = 2 * k + 1
    lower = list(iter_bits(n, k))
    upper = list(iter_bits(n, k + 1))
    offset = len(lower)
    upper_index = {bits: offset + idx for idx, bits in enumerate(upper)}
    lower_index = {bits: idx for idx, bits in enumerate(lower)}

    adjacency = []
    for bits in lower:
        adjacency.append(tuple(sorted(upper_index[bits | (1 << b)]
                                      for b in range(n) if not bits >> b & 1)))
    for bits in upper:
        adjacency.append(tuple(sorted(lower_index[bits ^ (1 << b)]
                                      for b in range(n) if bits >> b & 1)))

    logger.debug(f"Built M_{n}: {2 * offset} vertices")
    return SparseGraph(2 * offset, tuple(adjacency), family="middle", params={"k": k},
                       label_bits=lower + upper, ground_size=n,
                       bipartition=[0] * offset + [1] * offset)


def build_johnson(n: int, m: int) -> SparseGraph:
    """
    J(n, m): m-subsets of {1..n} in colex order, adjacent when they share m-1 elements.

    Raises:
        ParameterError: If not 1 <= m <= n <= 20
        CapExceededError: If C(n, m) is above the vertex cap
    """
    if not 1 <= m <= n <= Config.HARD_JOHNSON_MAX_N:
        raise ParameterError(f"need 1 <= m <= n <= {Config.HARD_JOHNSON_MAX_N}, got n={n}, m={m}",
                             source="build_johnson")
    if binomial(n, m) > JOHNSON_MAX_VERTICES:
        raise CapExceededError(f"J({n},{m}) has {binomial(n, m)} vertices, cap is {JOHNSON_MAX_VERTICES}",
                               source="build_johnson")
    layer = list(iter_bits(n, m))
    index = {bits: idx for idx, bits in enumerate(layer)}

    adjacency = []
    for bits in layer:
        inside = [b for b in range(n) if bits >> b & 1]
        outside = [b for b in range(n) if not bits >> b & 1]
        adjacency.append(tuple(sorted(index[(bits ^ (1 << a)) | (1 << b)]
                                      for a in inside for b in outside)))
    return SparseGraph(len(layer), tuple(adjacency), family="johnson", params={"n": n, "m": m},
                       label_bits=layer, ground_size=n)


def extract_middle_subgraph(q: SparseGraph, k: int) -> SparseGraph:
    """
    Induced subgraph of Q_{2k+1} on weights k and k+1, in build_middle_cube's vertex order.

    Raises:
        DimensionError: If q is not the hypercube of dimension 2k+1
    """
    n = 2 * k + 1
    if q.family != "hypercube" or q.params.get("n") != n:
        raise DimensionError(f"expected Q_{n}, got {q.family} {q.params}", source="extract_middle_subgraph")

    # hypercube vertex ids are the masks themselves, so numeric order is colex order
    lower = [u for u in range(q.num_vertices) if popcount(u) == k]
    upper = [u for u in range(q.num_vertices) if popcount(u) == k + 1]
    kept = lower + upper
    relabel = {u: idx for idx, u in enumerate(kept)}

    adjacency = tuple(tuple(sorted(relabel[w] for w in q.adjacency[u] if w in relabel)) for u in kept)
    return SparseGraph(len(kept), adjacency, family="middle", params={"k": k},
                       label_bits=kept, ground_size=n,
                       bipartition=[0] * len(lower) + [1] * len(upper))


def complement_map(k: int) -> List[int]:
    """For each k-subset of {1..2k+1} (colex), the colex index of its complement among (k+1)-subsets."""
    n = 2 * k + 1
    full = (1 << n) - 1
    upper_index = index_map(n, k + 1)
    return [upper_index[full ^ bits] for bits in iter_bits(n, k)]


def _bfs_components(g: SparseGraph) -> Tuple[int, bool]:
    """Component count and whether a proper 2-colouring exists."""
    colour, components, bipartite = _bfs_colouring(g)
    return components, bipartite


def two_colouring(g: SparseGraph) -> Optional[List[int]]:
    """0/1 colour per vertex (each component's lowest vertex gets 0), or None if g is not bipartite."""
    colour, _, bipartite = _bfs_colouring(g)
    return colour if bipartite else None


def _bfs_colouring(g: SparseGraph) -> Tuple[List[int], int, bool]:
    colour = [-1] * g.num_vertices
    components = 0
    bipartite = True
    for root in range(g.num_vertices):
        if colour[root] != -1:
            continue
        components += 1
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    bipartite = False
    return colour, components, bipartite


def validate(g: SparseGraph, cross_check: bool = False) -> ValidationReport:
    """
    Structural report: degree histogram, symmetry, loops, components, bipartiteness.

    Args:
        g: Graph to inspect
        cross_check: Also recompute components and bipartiteness with networkx
    """
    degrees = Counter(len(nbrs) for nbrs in g.adjacency)
    loop_free = all(u not in nbrs for u, nbrs in enumerate(g.adjacency))
    duplicate_free = all(len(set(nbrs)) == len(nbrs) for nbrs in g.adjacency)
    symmetric = all(0 <= w < g.num_vertices and g.has_edge(w, u)
                    for u, nbrs in enumerate(g.adjacency) for w in nbrs)

    components, bipartite = _bfs_components(g)

    respected = None
    if g.bipartition is not None:
        respected = all(g.bipartition[u] != g.bipartition[w]
                        for u, nbrs in enumerate(g.adjacency) for w in nbrs)

    report = ValidationReport(
        num_vertices=g.num_vertices,
        num_edges=g.num_edges,
        degree_histogram=dict(sorted(degrees.items())),
        symmetric=symmetric,
        loop_free=loop_free,
        duplicate_free=duplicate_free,
        components=components,
        bipartite=bipartite,
        bipartition_respected=respected,
    )

    if cross_check:
        graph = g.to_networkx()
        nx_components = nx.number_connected_components(graph) if g.num_vertices else 0
        report.networkx_agrees = (nx_components == components and nx.is_bipartite(graph) == bipartite)
        if not report.networkx_agrees:
            logger.warning(f"networkx disagrees with BFS validation for {g.family} {g.params}")

    return report


def build_family(family: str, params: Dict[str, Any]) -> SparseGraph:
    """Dispatch by family name: hypercube (n), middle (k), johnson (n, m)."""
    if family == "hypercube":
        return build_hypercube(params["n"])
    if family == "middle":
        return build_middle_cube(params["k"])
    if family == "johnson":
        return build_johnson(params["n"], params["m"])
    raise ParameterError(f"unknown graph family {family!r}", source="build_family")
