import json
import subprocess
import sys

import pytest

from icoq.cli import main
from icoq.errors import UnknownSuite
from icoq.report import SCHEMA, Check, SuiteBuilder, VerificationReport, render_json, render_text
from icoq.suites import run_suite


def test_empty_report_json():
    assert json.loads(render_json(VerificationReport("empty"))) == {
        "schema": SCHEMA, "suite": "empty", "status": "pass", "checks": []}


def test_single_pass_text_row():
    b = SuiteBuilder("one")
    b.equal("answer", "cite", 42, 42)
    lines = render_text(b.report, timing=False).splitlines()
    rows = [l for l in lines if l.startswith("answer")]
    assert len(rows) == 1 and "PASS" in rows[0]


def test_flagged_never_fails():
    r = VerificationReport("x", [Check("a", "c", "flagged", "1", "2")])
    assert r.status == "pass" and len(r.flagged) == 1
    r.checks.append(Check("b", "c", "fail", "1", "2"))
    assert r.status == "fail"
    with pytest.raises(ValueError):
        Check("c", "c", "maybe", "", "")


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")
    assert main(["verify", "nope"]) == 2


def test_usage_error_exit_code():
    assert main(["frobnicate"]) == 2


def test_wps_suite_is_byte_identical_without_timing(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "wps", "--format", "json", "--no-timing", "--out", str(a)]) == 0
    assert main(["verify", "wps", "--format", "json", "--no-timing", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["schema"] == SCHEMA and all(c["elapsed_ms"] == 0 for c in data["checks"])


def test_io_error_exit_code(tmp_path):
    assert main(["verify", "wps", "--out", str(tmp_path / "missing" / "x.json")]) == 4


def test_classify_command(tmp_path, capsys):
    curve = tmp_path / "curve.txt"
    curve.write_text("y^2 - x^5\n")
    assert main(["classify", "--curve", str(curve), "--point", "0,0", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["type"] == "A4" and out["milnor"] == 4
    assert main(["classify", "--curve", str(curve), "--point", "1,2"]) == 2


def test_classify_over_a_number_field(tmp_path, capsys):
    curve = tmp_path / "ups.txt"
    curve.write_text("256*z4^5 - 1600*z4^3*z5 - 27*z4^2 + 2250*z4*z5^2 + 3125*z5^4 + 108*z5")
    code = main(["classify", "--curve", str(curve), "--point", "3/20*c^2, 3/50*c",
                 "--field", "c^3 - 10"])
    assert code == 0 and capsys.readouterr().out.startswith("A2")


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "icoq.cli", "verify", "lefschetz", "--no-timing"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "status: PASS" in proc.stdout


def test_all_suite_serial_and_parallel_agree():
    serial = run_suite("all", emit=True)
    parallel = run_suite("all", emit=True, parallel=True)
    assert render_json(serial, timing=False) == render_json(parallel, timing=False)
    assert serial.status == "pass"
    assert sorted(c.id for c in serial.flagged) == ["invariants.h12.printed-form",
                                                    "subgroups.row.12:dih.generators"]
    assert {"invariants.z10", "invariants.z15"} <= set(serial.artifacts)
