"""Shipped JSON schemas versus what the tools actually emit."""

import json
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

from qundet.cli import run
from qundet.codes import catalog, save_spec

DOCS = Path(__file__).resolve().parent.parent / "docs"


@pytest.fixture(scope="module")
def spec_schema():
    schema = json.loads((DOCS / "code_spec.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    return schema


@pytest.fixture(scope="module")
def report_schema():
    schema = json.loads((DOCS / "undetermined_report.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    return schema


@pytest.mark.parametrize("name,n", [
    ("code_412", None), ("code_513", None), ("steane_713", None),
    ("code_422", None), ("ghz", 5), ("cyclic", 7),
])
def test_saved_specs_conform(tmp_path, spec_schema, name, n):
    path = tmp_path / "spec.json"
    save_spec(catalog(name, n=n) if n else catalog(name), path)
    jsonschema.validate(json.loads(path.read_text()), spec_schema)


def test_schema_rejects_unknown_field(spec_schema):
    doc = {"name": "x", "n": 2, "k": 1, "stabilizers": ["ZZ"],
           "logical_z": ["XX"], "extra": 1}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, spec_schema)


@pytest.mark.parametrize("argv", [
    ["analyze", "--catalog", "code_513", "--conditional", "1",
     "--conditional", "3", "--max-trace", "4", "--oracle"],
    ["analyze", "--catalog", "code_422"],
    ["analyze", "--catalog", "steane_713", "--conditional", "3"],
    ["analyze", "--catalog", "ghz", "--n", "6"],
])
def test_analyze_reports_conform(tmp_path, capsys, report_schema, argv):
    out = tmp_path / "report.json"
    assert run(argv + ["--json", str(out)]) == 0
    capsys.readouterr()
    jsonschema.validate(json.loads(out.read_text()), report_schema)


def test_no_unconditional_d_report_conforms(tmp_path, capsys, report_schema):
    spec = tmp_path / "w1.json"
    spec.write_text(json.dumps({
        "name": "w1", "n": 2, "k": 1,
        "stabilizers": ["ZZ"], "logical_z": ["ZI"],
    }))
    out = tmp_path / "report.json"
    assert run(["analyze", "--spec", str(spec), "--json", str(out)]) == 0
    capsys.readouterr()
    doc = json.loads(out.read_text())
    assert doc["result"]["minimal_unconditional_d"] is None
    jsonschema.validate(doc, report_schema)
