import json

import pytest

from qkverify.report import (
    SUITES, SuiteConfig, run_suite, report_json, report_markdown,
    emit_report, exit_code, CheckReport,
)
from qkverify import cli


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(n=0)
    with pytest.raises(ValueError):
        SuiteConfig(suites=("nope",))
    with pytest.raises(ValueError):
        SuiteConfig(mode="maybe")


def test_isotropy_suite_n2():
    reports = run_suite(SuiteConfig(n=2, suites=("isotropy",)))
    ids = [r.id for r in reports]
    assert "isotropy.dim" in ids
    assert all(r.verdict == "PASS" for r in reports)
    assert exit_code(reports) == 0


def test_observe_mode_never_fails():
    reports = run_suite(SuiteConfig(n=2, suites=("isotropy", "weyl"),
                                    mode="observe"))
    assert all(r.verdict == "OBSERVED" for r in reports)
    assert exit_code(reports) == 0


def test_reports_byte_identical():
    cfg = SuiteConfig(n=2, suites=("isotropy", "weyl", "bochner"), seed=7)
    a = report_json(run_suite(cfg))
    b = report_json(run_suite(cfg))
    assert a == b


def test_json_canonical_shape():
    reports = run_suite(SuiteConfig(n=2, suites=("bochner",)))
    doc = json.loads(report_json(reports))
    ids = [c["id"] for c in doc["checks"]]
    assert ids == sorted(ids)
    assert doc["summary"]["fail"] == 0
    assert json.loads(report_json([])) == {
        "checks": [], "summary": {"pass": 0, "fail": 0, "observed": 0}}


def test_exit_code_fail():
    bad = CheckReport("x.y", "d", "1", "2", "FAIL")
    assert exit_code([bad]) == 1


def test_markdown_contains_summary():
    reports = run_suite(SuiteConfig(n=2, suites=("isotropy",)))
    md = report_markdown(reports)
    assert "## isotropy" in md
    assert "0 failures" in md


def test_emit_report_writes_file(tmp_path):
    reports = run_suite(SuiteConfig(n=2, suites=("bochner",)))
    out = tmp_path / "r.json"
    text = emit_report(reports, "json", str(out))
    assert out.read_text() == text


def test_cli_verify(tmp_path, capsys):
    out = tmp_path / "rep.json"
    code = cli.main(["verify", "--n", "2", "--suite", "isotropy",
                     "--seed", "7", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["fail"] == 0


def test_cli_weyl(capsys):
    assert cli.main(["weyl", "--n", "3", "--p", "2", "--q", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dim"] == 21


def test_cli_decompose(capsys):
    assert cli.main(["decompose", "--n", "2", "--k", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["total"] == 28
    assert doc["unidentified"] == 0


def test_cli_form(tmp_path, capsys):
    from qkverify.quaternionic import build_phi
    path = tmp_path / "phi.json"
    path.write_text(json.dumps(build_phi(2).to_json_dict()))
    assert cli.main(["form", "--file", str(path), "--op", "isotropy"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["isotropy_dim"] == 13
