"""
Bounded, deterministic Hamiltonian cycle search with checkable certificates.
"""
import logging
from collections import Counter, deque
from dataclasses import dataclass
from typing import List, Optional

from config import Config
from core.combinatorics import elements_of
from core.errors import MidspecError, ParameterError
from core.graphs import SparseGraph, two_colouring
from models.certificate import CycleCertificate, SearchResult, SearchStatus

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 250_000
START_VERTEX = 0


@dataclass
class _Frame:
    owner: int
    candidates: List[int]
    position: int = 0


class _CycleSearch:
    """
    Depth-first path extension from vertex 0.

    Neighbours are tried by ascending count of unvisited neighbours, ties by
    index. A branch is cut when an unvisited vertex is left with fewer than
    two usable neighbours, when the start has no unvisited neighbour left,
    or when the unvisited vertices are no longer reachable from the path end.
    """

    def __init__(self, g: SparseGraph, budget: int):
        self.g = g
        self.budget = budget
        self.size = g.num_vertices
        self.visited = [False] * self.size
        self.free_degree = [len(nbrs) for nbrs in g.adjacency]
        self.path: List[int] = []
        self.expansions = 0

    def _visit(self, v: int) -> None:
        self.path.append(v)
        self.visited[v] = True
        for w in self.g.adjacency[v]:
            self.free_degree[w] -= 1

    def _unvisit(self, v: int) -> None:
        self.path.pop()
        self.visited[v] = False
        for w in self.g.adjacency[v]:
            self.free_degree[w] += 1

    def _candidates(self, v: int) -> List[int]:
        free = [w for w in self.g.adjacency[v] if not self.visited[w]]
        return sorted(free, key=lambda w: (self.free_degree[w], w))

    def _pruned(self, v: int, previous: int) -> bool:
        g = self.g
        start = self.path[0]

        # neighbours of the old end lost it as a possible connection
        if previous != start:
            for w in g.adjacency[previous]:
                if self.visited[w]:
                    continue
                usable = self.free_degree[w] + g.has_edge(w, v) + g.has_edge(w, start)
                if usable < 2:
                    return True

        remaining = self.size - len(self.path)
        if not any(not self.visited[w] for w in g.adjacency[start]):
            return True

        reached = 0
        seen = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not self.visited[w] and w not in seen:
                    seen.add(w)
                    reached += 1
                    queue.append(w)
        return reached < remaining

    def run(self) -> SearchResult:
        start = START_VERTEX
        self._visit(start)
        stack = [_Frame(start, self._candidates(start))]

        while stack:
            frame = stack[-1]
            if frame.position >= len(frame.candidates):
                stack.pop()
                if frame.owner != start:
                    self._unvisit(frame.owner)
                continue

            v = frame.candidates[frame.position]
            frame.position += 1
            if self.visited[v]:
                continue

            if self.expansions >= self.budget:
                logger.info(f"Search budget of {self.budget} expansions exhausted")
                return SearchResult(SearchStatus.UNKNOWN, expansions=self.expansions,
                                    note=f"budget of {self.budget} expansions exhausted")
            self.expansions += 1
            if self.expansions % PROGRESS_EVERY == 0:
                logger.info(f"Search progress: {self.expansions} expansions, depth {len(self.path)}")

            previous = self.path[-1]
            self._visit(v)

            if len(self.path) == self.size:
                if self.g.has_edge(v, start):
                    certificate = canonical_cycle(self.path, self.size)
                    logger.info(f"Hamiltonian cycle found after {self.expansions} expansions")
                    return SearchResult(SearchStatus.FOUND, certificate=certificate,
                                        expansions=self.expansions)
                self._unvisit(v)
                continue

            if self._pruned(v, previous):
                self._unvisit(v)
                continue

            stack.append(_Frame(v, self._candidates(v)))

        return SearchResult(SearchStatus.UNKNOWN, expansions=self.expansions,
                            note="search space exhausted without a cycle")


def canonical_cycle(vertices: List[int], graph_order: int) -> CycleCertificate:
    """Rotate to start at the smallest index and take the direction with the smaller second vertex."""
    pivot = vertices.index(min(vertices))
    rotated = vertices[pivot:] + vertices[:pivot]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return CycleCertificate(tuple(rotated), graph_order)


def find_hamiltonian_cycle(g: SparseGraph, budget: Optional[int] = None) -> SearchResult:
    """
    Search for a Hamiltonian cycle within a node-expansion budget.

    Args:
        g: Graph to search
        budget: Maximum node expansions; defaults to the configured budget

    Returns:
        SearchResult; status UNKNOWN never means the graph is non-Hamiltonian

    Raises:
        ParameterError: If budget < 1
    """
    budget = Config.get_int(Config.BUDGET, budget)
    if budget < 1:
        raise ParameterError(f"budget must be positive, got {budget}", source="find_hamiltonian_cycle")

    if g.num_vertices < 3:
        return SearchResult(SearchStatus.UNKNOWN, note="fewer than 3 vertices")
    if any(len(nbrs) < 2 for nbrs in g.adjacency):
        return SearchResult(SearchStatus.UNKNOWN, note="a vertex has degree below 2")

    colours = two_colouring(g)
    if colours is not None:
        parts = Counter(colours)
        if parts[0] != parts[1]:
            logger.info(f"Bipartite graph with parts {parts[0]} and {parts[1]}; no cycle possible")
            return SearchResult(SearchStatus.UNKNOWN,
                                note=f"bipartite with unequal parts {parts[0]} and {parts[1]}")

    result = _CycleSearch(g, budget).run()
    if result.found and not verify_cycle(g, result.certificate):
        raise MidspecError("search produced a cycle that fails verification", source="find_hamiltonian_cycle")
    return result


def verify_cycle(g: SparseGraph, c: CycleCertificate) -> bool:
    """True iff c visits every vertex of g exactly once and consecutive vertices (cyclically) are adjacent."""
    vertices = c.vertices
    if c.graph_order != g.num_vertices or len(vertices) != g.num_vertices or len(vertices) < 3:
        return False
    if any(not 0 <= u < g.num_vertices for u in vertices):
        return False
    if len(set(vertices)) != len(vertices):
        return False
    return all(g.has_edge(vertices[t], vertices[(t + 1) % len(vertices)]) for t in range(len(vertices)))


def revolving_door_steps(g: SparseGraph, c: CycleCertificate) -> List[int]:
    """
    Element added (+e) or removed (-e) at each step of the cycle, wrapping back to the start.

    Raises:
        ParameterError: If g carries no subset labels
    """
    if g.label_bits is None:
        raise ParameterError("graph has no subset labels", source="revolving_door_steps")
    steps = []
    vertices = c.vertices
    for t in range(len(vertices)):
        before = g.label_bits[vertices[t]]
        after = g.label_bits[vertices[(t + 1) % len(vertices)]]
        changed = elements_of(before ^ after)
        if len(changed) != 1:
            raise ParameterError(f"step {t} changes {len(changed)} elements", source="revolving_door_steps")
        steps.append(changed[0] if after & ~before else -changed[0])
    return steps
