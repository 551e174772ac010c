"""
Renderers for every artifact midspec writes: spectra, the multiplicity table,
edge lists, graph / certificate / report JSON, eigenbasis blocks and ledger rows.

All output is deterministic text; the formats are documented in docs/formats.md.
"""
import csv
import io
import json
import logging
from datetime import datetime
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

from core.combinatorics import elements_of
from core.errors import ParameterError
from core.exactla import format_matrix_text, parse_matrix_text
from core.graphs import SparseGraph
from models.certificate import CycleCertificate
from models.report import RunReport
from models.spectrum import EigenbasisBlock, SpectrumTable
from services.spectrum import PUBLISHED_PREFIX, middle_cube_spectrum, multiplicity_sequence

logger = logging.getLogger(__name__)

FORMATS = ("table", "csv", "json")


class RecordExporter:
    """Turns objects into rows through a column -> attribute mapping."""

    def __init__(self,
                 field_mapping: Dict[str, str],
                 format_funcs: Dict[str, Callable] = None):
        """
        Initialize record exporter.

        Args:
            field_mapping: Ordered mapping of output columns to attribute paths (dots allowed)
            format_funcs: Optional formatting function per attribute path
        """
        self.field_mapping = field_mapping
        self.format_funcs = format_funcs or {}

    @property
    def header(self) -> List[str]:
        return list(self.field_mapping.keys())

    def format_record(self, record: Any) -> List[str]:
        """
        Format one object as a row of strings.

        Args:
            record: Object or mapping to read attributes from

        Returns:
            List of values in column order
        """
        result = []
        for field_name in self.field_mapping.values():
            value = self._get_attribute_value(record, field_name)
            if field_name in self.format_funcs:
                value = self.format_funcs[field_name](value)
            else:
                value = self._format_value(value)
            result.append(value)
        return result

    def _get_attribute_value(self, record: Any, attr_name: str) -> Any:
        """
        Get attribute value, supporting nested attributes with dot notation.

        Mappings are read by key, other objects by attribute.
        """
        value = record
        for part in attr_name.split('.'):
            if isinstance(value, dict):
                value = value.get(part)
            else:
                value = getattr(value, part, None)
            if value is None:
                break
        return value

    def _format_value(self, value: Any) -> str:
        if value is None:
            return ""
        elif isinstance(value, datetime):
            return value.strftime("%Y-%m-%d %H:%M:%S")
        elif isinstance(value, bool):
            return "true" if value else "false"
        elif hasattr(value, "value") and not isinstance(value, (int, str)):
            return str(value.value)
        else:
            return str(value)

    def rows(self, records: Iterable[Any]) -> List[List[str]]:
        return [self.format_record(record) for record in records]

    def render(self, records: Iterable[Any], fmt: str) -> str:
        """Render records as an aligned table, CSV, or a JSON list of objects."""
        rows = self.rows(records)
        if fmt == "csv":
            return render_csv(self.header, rows)
        if fmt == "json":
            return dump_json([dict(zip(self.header, row)) for row in rows])
        return render_table(self.header, rows)


def check_format(fmt: str) -> str:
    if fmt not in FORMATS:
        raise ParameterError(f"unknown format {fmt!r}, expected one of {', '.join(FORMATS)}",
                             source="--format")
    return fmt


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def render_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Right-aligned columns separated by two spaces, header first."""
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[col]) for row in cells) for col in range(len(header))]
    lines = ["  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


# === Spectra ===

def render_spectrum(table: SpectrumTable, fmt: str) -> str:
    """
    Spectrum as (eigenvalue, multiplicity) rows in ascending eigenvalue order.

    JSON follows docs/schemas/spectrum.schema.json; multiplicities are decimal strings.
    """
    check_format(fmt)
    if fmt == "json":
        return dump_json(table.to_json())
    rows = [(value, multiplicity) for value, multiplicity in table.items()]
    if fmt == "csv":
        return render_csv(["eigenvalue", "multiplicity"], rows)
    return render_table(["eigenvalue", "multiplicity"], rows) + f"order {table.order}\n"


def render_multiplicity_table(k_max: int, fmt: str, with_sequence: bool = False) -> str:
    """
    One row per n = 3, 5, ..., 2k_max+1; columns -(k_max+1)..-1, 1..k_max+1, blank where absent.
    """
    check_format(fmt)
    if k_max < 1:
        raise ParameterError(f"k_max must be >= 1, got {k_max}", source="render_multiplicity_table")
    columns = [v for v in range(-(k_max + 1), k_max + 2) if v != 0]
    tables = [(2 * k + 1, middle_cube_spectrum(k)) for k in range(1, k_max + 1)]

    sequence = multiplicity_sequence(k_max) if with_sequence else None
    prefix = sequence[:len(PUBLISHED_PREFIX)] if sequence is not None else None
    prefix_match = prefix == PUBLISHED_PREFIX if sequence is not None and len(sequence) >= len(PUBLISHED_PREFIX) else None

    if fmt == "json":
        data = {
            "columns": columns,
            "rows": [
                {"n": n, "multiplicities": {str(v): str(t.multiplicity(v)) for v in columns if t.multiplicity(v)}}
                for n, t in tables
            ],
        }
        if sequence is not None:
            data["sequence"] = [str(m) for m in sequence]
            data["prefix_match"] = prefix_match
        return dump_json(data)

    header = ["n"] + [str(v) for v in columns]
    rows = [[n] + [t.multiplicity(v) or "" for v in columns] for n, t in tables]
    text = render_csv(header, rows) if fmt == "csv" else render_table(header, rows)
    if sequence is not None:
        text += "sequence " + ", ".join(str(m) for m in sequence) + "\n"
        text += "prefix match " + _match_word(prefix_match) + "\n"
    return text


def _match_word(match: Optional[bool]) -> str:
    if match is None:
        return "n/a (k_max < 3)"
    return "true" if match else "false"


# === Graphs ===

def render_edge_list(g: SparseGraph) -> str:
    """'p <vertices> <edges>' then one 'e u v' line per edge, u < v, sorted."""
    lines = [f"p {g.num_vertices} {g.num_edges}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> SparseGraph:
    """
    Inverse of render_edge_list.

    Raises:
        ParameterError: On a malformed line or an edge count that disagrees with the header
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or lines[0][0] != "p" or len(lines[0]) != 3:
        raise ParameterError("edge list must start with 'p <vertices> <edges>'", source="parse_edge_list")
    num_vertices, num_edges = int(lines[0][1]), int(lines[0][2])
    edges = []
    for parts in lines[1:]:
        if parts[0] != "e" or len(parts) != 3:
            raise ParameterError(f"bad edge line {' '.join(parts)!r}", source="parse_edge_list")
        edges.append((int(parts[1]), int(parts[2])))
    if len(edges) != num_edges:
        raise ParameterError(f"header says {num_edges} edges, found {len(edges)}", source="parse_edge_list")
    return SparseGraph.from_edges(num_vertices, edges)


def graph_to_json(g: SparseGraph) -> dict:
    data = {
        "family": g.family,
        "params": g.params,
        "num_vertices": g.num_vertices,
        "num_edges": g.num_edges,
        "edges": [[u, v] for u, v in g.edges()],
    }
    if g.label_bits is not None:
        data["labels"] = [elements_of(bits) for bits in g.label_bits]
    return data


def render_graph(g: SparseGraph, fmt: str) -> str:
    """Edge list for table/csv, labelled JSON for json."""
    check_format(fmt)
    if fmt == "json":
        return dump_json(graph_to_json(g))
    return render_edge_list(g)


# === Certificates and reports ===

def certificate_to_json(g: SparseGraph, c: CycleCertificate, steps: Optional[List[int]] = None) -> dict:
    data = {
        "family": g.family,
        "params": g.params,
        "order": c.graph_order,
        "cycle": c.to_json(),
    }
    if g.label_bits is not None:
        data["labels"] = [elements_of(g.label_bits[u]) for u in c.vertices]
    if steps is not None:
        data["steps"] = steps
    return data


def render_report(report: RunReport, fmt: str) -> str:
    check_format(fmt)
    if fmt == "json":
        return dump_json(report.to_json(include_elapsed=True))
    if fmt == "csv":
        rows = [(c.name, c.status, c.detail) for c in report.checks]
        return render_csv(["check", "status", "detail"], rows)
    return report.get_report() + "\n"


# === Eigenbasis blocks ===

def render_block(block: EigenbasisBlock, vectors=None) -> str:
    """Header 'k r eigenvalue rows cols', then the matrix text of the rows."""
    return block.header + "\n" + format_matrix_text(vectors if vectors is not None else block.vectors)


def parse_block(text: str) -> EigenbasisBlock:
    """Inverse of render_block."""
    first, _, rest = text.partition("\n")
    try:
        k, r, eigenvalue, rows, cols = (int(x) for x in first.split())
    except ValueError:
        raise ParameterError(f"bad block header {first!r}", source="parse_block")
    vectors = parse_matrix_text(rest)
    if vectors.shape != (rows, cols):
        raise ParameterError(f"header says {rows}x{cols}, matrix is {vectors.rows}x{vectors.cols}",
                             source="parse_block")
    return EigenbasisBlock(k=k, r=r, eigenvalue=eigenvalue, vectors=vectors)


def create_formatters(date_format: str = "%Y-%m-%d %H:%M:%S") -> Dict[str, Callable]:
    """
    Common format functions for ledger rows.

    Args:
        date_format: Format string for datetime values
    """
    return {
        "date": lambda d: d.strftime(date_format) if d else "",
        "bool": lambda b: "true" if b else "false",
        "float": lambda f: f"{f:.3f}" if f is not None else "",
        "enum": lambda e: e.value if e is not None else "",
        "str": lambda s: str(s) if s else "",
    }
