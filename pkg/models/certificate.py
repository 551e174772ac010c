"""
Hamiltonian cycle certificates and search outcomes.
"""
import enum
from dataclasses import dataclass
from typing import List, Optional, Tuple


class SearchStatus(enum.Enum):
    """Outcome of a bounded cycle search"""
    FOUND = "found"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CycleCertificate:
    """Cyclic vertex ordering claimed to be a Hamiltonian cycle of a graph of graph_order vertices."""
    vertices: Tuple[int, ...]
    graph_order: int

    def to_json(self) -> List[int]:
        return list(self.vertices)


@dataclass
class SearchResult:
    status: SearchStatus
    certificate: Optional[CycleCertificate] = None
    expansions: int = 0
    note: str = ""

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND
