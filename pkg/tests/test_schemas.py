import json
from pathlib import Path

import jsonschema
import pytest

from midspec import main

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def load_schema(name):
    schema = json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text(encoding="utf-8"))
    jsonschema.Draft202012Validator.check_schema(schema)
    return schema


@pytest.mark.parametrize("schema,argv,code", [
    ("spectrum", ["spectrum", "--k", "3"], 0),
    ("spectrum", ["spectrum", "--family", "johnson", "--n", "7", "--m", "3"], 0),
    ("table", ["table", "--kmax", "4", "--oeis"], 0),
    ("table", ["table", "--kmax", "2"], 0),
    ("report", ["verify", "--k", "1"], 0),
    ("report", ["verify", "--k", "6", "--checks", "charpoly"], 2),
    ("graph", ["export", "--family", "johnson", "--n", "5", "--m", "2"], 0),
    ("certificate", ["hamilton", "--k", "2", "--steps"], 0),
    ("search", ["hamilton", "--k", "2", "--budget", "1"], 2),
])
def test_json_output_matches_schema(capsys, schema, argv, code):
    assert main(argv + ["--format", "json"]) == code
    jsonschema.validate(instance=json.loads(capsys.readouterr().out), schema=load_schema(schema))


def test_history_matches_schema(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("MIDSPEC_DATABASE_URL", f"sqlite:///{tmp_path / 'runs.db'}")
    assert main(["verify", "--k", "1", "--checks", "rank"]) == 0
    capsys.readouterr()
    assert main(["history", "--format", "json"]) == 0
    jsonschema.validate(instance=json.loads(capsys.readouterr().out), schema=load_schema("history"))


def test_every_schema_is_well_formed():
    names = sorted(path.name.split(".")[0] for path in SCHEMA_DIR.glob("*.schema.json"))
    assert names == ["certificate", "graph", "history", "report", "search", "spectrum", "table"]
    for name in names:
        load_schema(name)
