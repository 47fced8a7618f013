import json
import subprocess
import sys

import pytest

from rrgroups.assembly.cases import library
from rrgroups.cli import main
from rrgroups.cli.suite import select, verify_tables


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_w_plus_e8_json(capsys):
    code, out, _ = run(capsys, "build", "--group", "W+(E8)", "--format", "json")
    assert code == 0
    assert json.loads(out)["order"] == 348364800


def test_info_m7p(capsys):
    code, out, _ = run(capsys, "info", "--group", "M7p", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert rep["order"] == 1344
    assert set(rep["rotation_orders"]) == {"2"}
    assert rep["reflections"] == 0


def test_unparseable_group_is_a_usage_error(capsys):
    code, _, err = run(capsys, "build", "--group", "W(Z9)")
    assert code == 2
    assert "W(Z9)" in err


def test_unknown_verb(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 2
    assert "usage" in err


def test_missing_group_argument(capsys):
    code, _, _ = run(capsys, "info")
    assert code == 2


def test_unreadable_file(capsys, tmp_path):
    code, _, _ = run(capsys, "info", "--file", str(tmp_path / "missing.json"))
    assert code == 2


def test_enumeration_cap_reports_failure(capsys):
    code, _, err = run(capsys, "info", "--group", "W(H4)", "--max-elements", "100")
    assert code == 1
    assert "cap" in err


def test_export_and_reimport(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--group", "W(H3)")
    assert code == 0
    path = tmp_path / "h3.json"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "build", "--file", str(path), "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["order"] == 120 and rep["status"] == "pass"


def test_plane_system_and_isotropy(capsys):
    code, out, _ = run(capsys, "plane-system", "--group", "M5", "--format", "json")
    assert code == 0 and json.loads(out) == {"name": "M5", "planes": 30, "closed": True}
    code, out, _ = run(capsys, "isotropy-check", "--group", "R6(PSL27)", "--format", "json")
    assert code == 0 and json.loads(out)["ok"]


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog-list", "--format", "json")
    rows = json.loads(out)["groups"]
    assert code == 0
    assert {"name": "M~8", "order": 344064} in rows


def test_assemble_from_file(capsys, tmp_path):
    path = tmp_path / "twisted.json"
    path.write_text(library()["twisted-H3"].dumps(), encoding="utf-8")
    code, out, _ = run(capsys, "assemble", "--file", str(path), "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert (rep["order"], rep["reflections"]) == (120, 0)
    assert rep["validation"]["ok"]


def test_assemble_reports_invalid_data(capsys, tmp_path):
    obj = json.loads(library()["diagonal-A2"].dumps())
    obj["isos"] = []
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj), encoding="utf-8")
    code, out, _ = run(capsys, "assemble", "--file", str(path), "--format", "json")
    assert code == 1
    assert [e["code"] for e in json.loads(out)["validation"]["errors"]] == ["iso-missing"]


def test_decompose_then_assemble(capsys, tmp_path):
    code, out, _ = run(capsys, "decompose", "--group", "Delta(W(H3),galois2)", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["triples"]) == 2 and len(data["isos"]) == 1
    path = tmp_path / "data.json"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "assemble", "--file", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["order"] == 120


def test_json_output_is_stable(capsys):
    first = run(capsys, "info", "--group", "W*(D4)", "--format", "json", "--seed", "7")[1]
    second = run(capsys, "info", "--group", "W*(D4)", "--format", "json", "--seed", "7")[1]
    assert first == second


def test_fast_suite_passes():
    suite = verify_tables("fast", jobs=2)
    payload = suite.to_json()
    assert suite.ok, [r.line() for r in suite.results if r.status != "pass"]
    assert payload["passed"] == payload["total"] >= 40
    assert sorted(payload) == ["checks", "ok", "passed", "tier", "total"]


def test_full_tier_contains_slow_checks():
    fast = {c.name for c in select("fast")}
    full = {c.name for c in select("full")}
    slow = full - fast
    assert "table2 |W+(E8)|" in slow
    assert "L rotation count and orders" in slow
    assert next(c for c in select("full") if c.name == "L rotation count and orders").expected == (420, [2])
    with pytest.raises(ValueError):
        select("medium")


def test_text_and_json_suite_agree(capsys):
    code_text, text, _ = run(capsys, "verify-tables")
    code_json, blob, _ = run(capsys, "verify-tables", "--format", "json", "--jobs", "2")
    statuses = {c["name"]: c["status"] for c in json.loads(blob)["checks"]}
    lines = text.splitlines()[:-1]
    assert len(lines) == len(statuses)
    for line in lines:
        status, rest = line.split(None, 1)
        assert statuses[rest.split(": expected")[0]] == status.lower()
    assert code_text == code_json == 0


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rrgroups.cli", "build", "--group", "W(I2(3))"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert "order 6" in proc.stdout
