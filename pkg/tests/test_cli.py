import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from bannai_ito.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, RunConfig, UsageError, build_report, main, render_markdown

SCHEMA = json.loads((Path(__file__).parents[1] / "schema" / "report.json").read_text())


def run_main(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_writes_a_valid_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run_main(capsys, "verify", "--suite", "osp-core", "--suite", "involutions", "--degree", "2",
                          "--out", str(out))
    assert code == EXIT_OK
    report = json.loads(out.read_text())
    jsonschema.validate(report, SCHEMA)
    assert report["status"] == "pass"
    assert report["config"]["suites"] == ["osp-core", "involutions"]
    assert [p.name for p in tmp_path.iterdir()] == ["r.json"]


@pytest.mark.parametrize("kind", ["b3-scalar", "z2-scalar", "b3-clifford"])
def test_all_suites_validate_against_schema(kind):
    report = build_report(RunConfig(realization=kind, degree=1, timings=False))
    jsonschema.validate(report, SCHEMA)
    assert report["status"] == "pass"


def test_no_timings_is_byte_stable(tmp_path, capsys):
    args = ["verify", "--realization", "z2-scalar", "--degree", "2", "--no-timings"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run_main(capsys, *args, "--out", str(a))[0] == EXIT_OK
    assert run_main(capsys, *args, "--out", str(b))[0] == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_parallel_jobs_match_serial():
    serial = build_report(RunConfig(realization="z2-scalar", degree=2, timings=False))
    parallel = build_report(RunConfig(realization="z2-scalar", degree=2, timings=False, jobs=2))
    serial["config"]["jobs"] = parallel["config"]["jobs"]
    assert serial == parallel


def test_degree_zero_is_accepted(capsys):
    code, out, _ = run_main(capsys, "verify", "--suite", "theorem-3-7", "--degree", "0")
    assert code == EXIT_OK
    assert json.loads(out)["config"]["degree"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "nope"],
        ["verify", "--suite", "clifford"],
        ["verify", "--param", "c=1"],
        ["verify", "--param", "a=x"],
        ["verify", "--param", "a"],
        ["verify", "--degree", "-1"],
        ["verify", "--jobs", "0"],
        ["verify", "--realization", "a4"],
        ["verify", "--format", "xml"],
        ["apply", "D_9", "x1"],
        ["apply", "D_1", "x1 +"],
        ["apply", "D_1", "e1*x1"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run_main(capsys, *argv)[0] == EXIT_USAGE


def test_specialized_parameters_are_echoed(capsys):
    code, out, _ = run_main(capsys, "verify", "--suite", "osp-core", "--degree", "1", "--param", "a=1/2",
                            "--param", "b=-3", "--no-timings")
    assert code == EXIT_OK
    assert json.loads(out)["config"]["params"] == {"a": "1/2", "b": "-3"}


def test_failing_identity_exits_1(monkeypatch, capsys):
    from bannai_ito import cli

    def fake_report(config):
        report = build_report(RunConfig(realization="z2-scalar", degree=1, suites=["osp-core"], timings=False))
        report["status"] = "fail"
        return report

    monkeypatch.setattr(cli, "build_report", fake_report)
    assert run_main(capsys, "verify")[0] == EXIT_FAIL


def test_markdown_report(capsys):
    code, out, _ = run_main(capsys, "verify", "--suite", "osp-core", "--degree", "1", "--format", "markdown")
    assert code == EXIT_OK
    assert out.startswith("# Verification report (pass)")
    assert "## osp-core (pass)" in out
    report = build_report(RunConfig(degree=1, suites=["osp-core"], timings=False))
    assert render_markdown(report).count("\n|") > 10


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["apply", "D_1", "x1"], "(1+4*a+2*b)"),
        (["apply", "Q_12 + Q_13", "1"], "2"),
        (["apply", "[A_minus, A_plus]", "1"], "(3+12*a+6*b)"),
        (["apply", "--param", "a=0", "--param", "b=1/2", "D_1", "x1^3"], "4*x1^2"),
        (["apply", "--realization", "b3-clifford", "A_plus", "1"], "x1*e1+x2*e2+x3*e3"),
    ],
)
def test_apply(capsys, argv, expected):
    code, out, _ = run_main(capsys, *argv)
    assert code == EXIT_OK
    assert out.strip() == expected


def test_resolved_suites_dedupes_and_checks():
    assert RunConfig(suites=["osp-core", "osp-core"]).resolved_suites() == ["osp-core"]
    with pytest.raises(UsageError):
        RunConfig(realization="z2-scalar", suites=["hyperoct-structure"]).resolved_suites()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bannai_ito", "apply", "D_2", "x2"], capture_output=True,
                          text=True, env={**os.environ})
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(1+4*a+2*b)"
