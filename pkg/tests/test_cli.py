import json
import subprocess
import sys

import jsonschema
import pytest

from qmock import cli

REPORT_SCHEMA = {
    "type": "object",
    "required": ["order", "results"],
    "properties": {
        "order": {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?\d+/\d+$"}]},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "status", "first_mismatch", "elapsed_ms"],
                "properties": {
                    "id": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "error"]},
                    "first_mismatch": {
                        "anyOf": [
                            {"type": "null"},
                            {"type": "object", "required": ["exponent", "lhs", "rhs"],
                             "properties": {k: {"type": "string"} for k in ("exponent", "lhs", "rhs")}},
                        ]
                    },
                    "elapsed_ms": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_curious_identity(capsys):
    code, out, _ = run(capsys, "verify", "--id", "2-3-cor-3-unusual", "--order", "100")
    assert code == 0
    assert "2-3-cor-3-unusual" in out and "PASS" in out
    assert out.splitlines()[-1] == "1 checked: 1 passed, 0 failed, 0 errors"


def test_expand_prints_one_half(capsys):
    code, out, _ = run(capsys, "expand", "m(q,q^2,-1)", "--order", "20")
    assert code == 0 and out.strip() == "1/2"


def test_expand_with_fractional_exponents(capsys):
    code, out, _ = run(capsys, "expand", "q^(1/2)/(1-q)", "--order", "3", "--denominator", "2")
    assert code == 0
    assert out.strip().startswith("q^(1/2) + q^(3/2)")


def test_unknown_identity_is_a_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--id", "nosuch")
    assert code == 2 and "nosuch" in err


def test_parse_error_is_a_usage_error(capsys):
    code, _, err = run(capsys, "expand", "m(q, q^2")
    assert code == 2 and "column" in err


def test_pole_is_an_evaluation_error(capsys):
    code, _, err = run(capsys, "expand", "m(q^(1/2), q, q)", "--order", "5", "--denominator", "2")
    assert code == 3 and "PoleError" in err


def test_missing_subcommand(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "--id", "x", "--all")[0] == 2


def test_bad_order(capsys):
    assert run(capsys, "verify", "--id", "W-Y-eq", "--order", "abc")[0] == 2
    assert run(capsys, "verify", "--id", "W-Y-eq", "--order", "-3")[0] == 2


def test_failing_verification_exit_code(capsys, tmp_path, monkeypatch):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps({"identities": [{"id": "bad", "lhs": "q", "rhs": "q + q^3"},
                                               {"id": "pole", "lhs": "m(q^(1/2), q, q)", "rhs": "0", "D": 2}]}))
    monkeypatch.setenv("QMOCK_CATALOG", str(path))
    code, out, _ = run(capsys, "verify", "--id", "bad", "--order", "10")
    assert code == 1 and "first mismatch at q^3: lhs=0 rhs=1" in out
    assert run(capsys, "verify", "--id", "pole", "--order", "10")[0] == 3
    # a failure outranks an error
    assert run(capsys, "verify", "--all", "--order", "10")[0] == 1


def test_json_report_matches_schema(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--id", "W-Y-eq", "--id", "ADH-id-barf", "--order", "20", "--json", str(target))
    assert code == 0
    doc = json.loads(target.read_text())
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["order"] == 20 and [r["id"] for r in doc["results"]] == ["W-Y-eq", "ADH-id-barf"]


def test_json_to_stdout_with_failure(capsys, tmp_path, monkeypatch):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps({"identities": [{"id": "bad", "lhs": "q/2", "rhs": "q^2", "D": 2}]}))
    monkeypatch.setenv("QMOCK_CATALOG", str(path))
    code, out, _ = run(capsys, "verify", "--all", "--order", "5/2", "--json", "-")
    doc = json.loads(out[out.index("{"):])
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert code == 1
    assert doc["order"] == "5/2"
    assert doc["results"][0]["first_mismatch"] == {"exponent": "1", "lhs": "1/2", "rhs": "0"}


def test_default_orders_reported_per_entry(capsys, tmp_path):
    target = tmp_path / "r.json"
    run(capsys, "verify", "--id", "W-Y-eq", "--id", "ADH-id-barf", "--json", str(target))
    doc = json.loads(target.read_text())
    assert [r["order"] for r in doc["results"]] == [40, 80]
    assert doc["order"] == 80


def test_convert_odd(capsys):
    code, out, _ = run(capsys, "convert", "--variant", "odd", "--n", "3", "--x", "q^3", "--y", "q^4", "--order", "40")
    assert code == 0 and "PASS" in out


def test_convert_coprime_with_fractional_arguments(capsys):
    code, out, _ = run(capsys, "convert", "--variant", "coprime", "--n", "3", "--p", "2",
                       "--x", "q^(9/4)", "--y=-q^(9/4)", "--base=-q^(1/2)", "--order", "30")
    assert code == 0, out


def test_convert_rejects_invalid_parameters(capsys):
    assert run(capsys, "convert", "--variant", "odd", "--n", "2", "--x", "q", "--y", "q^2")[0] == 2
    assert run(capsys, "convert", "--variant", "coprime", "--n", "2", "--p", "4", "--x", "q", "--y", "q^2")[0] == 2


def test_convert_pole_reports_error(capsys):
    code, out, _ = run(capsys, "convert", "--variant", "odd", "--n", "1", "--x", "q^2", "--y", "q^2", "--order", "20")
    assert code == 3 and "ERROR" in out


def test_list_by_tag(capsys):
    code, out, _ = run(capsys, "list", "--tag", "equivalence")
    ids = [line.split()[0] for line in out.splitlines()]
    assert code == 0 and "New-V18~HM-V18" in ids and len(ids) == 6


def test_report_on_small_catalog(capsys, tmp_path, monkeypatch):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps({"identities": [{"id": "a", "lhs": "1/(1-q)", "rhs": "sum(n, 0, inf, q^n)", "section": 2}]}))
    monkeypatch.setenv("QMOCK_CATALOG", str(path))
    code, out, _ = run(capsys, "report", "--order", "10")
    assert code == 0
    assert "identities: 1 checked: 1 passed, 0 failed, 0 errors" in out
    assert "specializations: 0 checked" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qmock", "expand", "Jm(1)", "--order", "7"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 - q - q^2 + q^5 + q^7"
