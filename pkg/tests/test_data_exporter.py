import json

import pytest

from core.errors import ParameterError
from models.report import CheckResult, RunReport
from services.data_exporter import (
    RecordExporter, certificate_to_json, parse_block, parse_edge_list, render_block, render_edge_list,
    render_report, render_spectrum, render_table,
)
from services.eigenbasis import lift_block
from services.hamiltonian import find_hamiltonian_cycle
from services.spectrum import johnson_spectrum


def test_render_table_right_aligns():
    assert render_table(["a", "bb"], [[1, 2], [300, ""]]) == "  a  bb\n  1   2\n300\n"


def test_record_exporter_reads_nested_keys_and_attributes():
    exporter = RecordExporter({"name": "name", "inner": "meta.value", "flag": "ok"})
    records = [{"name": "x", "meta": {"value": 3}, "ok": True}, {"name": "y", "meta": None, "ok": False}]
    assert exporter.rows(records) == [["x", "3", "true"], ["y", "", "false"]]
    assert exporter.render(records, "csv") == "name,inner,flag\nx,3,true\ny,,false\n"
    assert json.loads(exporter.render(records, "json"))[0] == {"name": "x", "inner": "3", "flag": "true"}

    check = CheckResult("eigen", True)
    assert RecordExporter({"check": "name", "status": "status"}).format_record(check) == ["eigen", "pass"]


def test_render_spectrum_rejects_unknown_format():
    with pytest.raises(ParameterError):
        render_spectrum(johnson_spectrum(5, 2), "xml")


def test_edge_list_round_trip_and_errors(m3):
    text = render_edge_list(m3)
    assert text.splitlines()[:2] == ["p 6 6", "e 0 3"]
    assert parse_edge_list(text).adjacency == m3.adjacency
    with pytest.raises(ParameterError):
        parse_edge_list("")
    with pytest.raises(ParameterError):
        parse_edge_list("p 2 2\ne 0 1\n")
    with pytest.raises(ParameterError):
        parse_edge_list("p 2 1\nx 0 1\n")


def test_block_text_round_trip():
    block = lift_block(2, 2)
    parsed = parse_block(render_block(block))
    assert parsed.header == block.header
    assert parsed.vectors == block.vectors
    with pytest.raises(ParameterError):
        parse_block("2 2 1\n1 1\n1\n")
    with pytest.raises(ParameterError):
        parse_block("2 2 1 1 3\n1 2\n1 0\n")


def test_certificate_json_labels(m5):
    certificate = find_hamiltonian_cycle(m5).certificate
    data = certificate_to_json(m5, certificate, steps=None)
    assert data["family"] == "middle"
    assert data["params"] == {"k": 2}
    assert data["order"] == 20
    assert [len(label) for label in data["labels"][:2]] == [2, 3]


def test_render_report_formats():
    report = RunReport(command="verify", parameters={"k": 1})
    report.add(CheckResult("eigen", True, "6 eigenvectors certified"))
    report.add(CheckResult("charpoly", False, "over cap (vertices=3432 > 80)", skipped=True))
    assert render_report(report, "table") == (
        "verify: INCOMPLETE\n"
        "  eigen: pass (6 eigenvectors certified)\n"
        "  charpoly: skipped: over cap (vertices=3432 > 80)\n"
    )
    assert render_report(report, "csv").splitlines()[0] == "check,status,detail"
    assert "elapsed_seconds" not in json.loads(render_report(report, "json"))
