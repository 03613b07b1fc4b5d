import json
import subprocess
import sys

from edsverify.cli import main


def run_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "edsverify.cli", *argv],
        capture_output=True,
        text=True,
    )


def test_suite_passes_in_process(tmp_path):
    out = tmp_path / "r.json"
    assert main(["combos", "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["suite"] == "combos"
    assert data["overall"] == "pass"
    assert all(c["status"] == "pass" for c in data["checks"])


def test_json_round_trips(tmp_path):
    out = tmp_path / "r.json"
    main(["nel", "--json", str(out)])
    data = json.loads(out.read_text())
    assert json.loads(json.dumps(data)) == data


def test_unknown_suite_exits_2():
    result = run_cli("no-such-suite")
    assert result.returncode == 2


def test_unknown_flag_exits_2():
    result = run_cli("combos", "--frobnicate")
    assert result.returncode == 2


def test_parse_failure_exits_3(tmp_path):
    bad = tmp_path / "bad.eds"
    bad.write_text("frame A B C D\nscalars lambda sigma\noneforms F G L S\nd A = B^\n")
    result = run_cli("combos", "--eds", str(bad))
    assert result.returncode == 3
    assert "line 4" in result.stderr


def test_seeded_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["numeric", "--seed", "7", "--points", "25", "--json", str(a)]) == 0
    assert main(["numeric", "--seed", "7", "--points", "25", "--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_numeric_flags(tmp_path):
    out = tmp_path / "n.json"
    assert main(["numeric", "--seed", "3", "--points", "10", "--tol", "1e-10", "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    ids = {c["id"] for c in data["checks"]}
    assert "sweep-weakly_einstein" in ids and "orbit-group" in ids


def test_case_ii_report_mentions_certificate(tmp_path, capsys):
    assert main(["case-ii"]) == 0
    captured = capsys.readouterr()
    assert "case-ii" in captured.out
    assert "5/2*sig^2" in captured.out  # the certificate is printed


def test_modified_system_fails_cleanly(tmp_path):
    # flip a sign in the dS rule: suites must fail, not crash
    from importlib import resources

    text = resources.files("edsverify").joinpath("data", "weakly-einstein.eds").read_text()
    broken = text.replace("d S = -lambda A^B + lambda C^D", "d S = lambda A^B + lambda C^D")
    path = tmp_path / "broken.eds"
    path.write_text(broken)
    out = tmp_path / "broken.json"
    code = main(["structure", "--eds", str(path), "--json", str(out)])
    assert code == 1
    data = json.loads(out.read_text())
    assert data["overall"] == "fail"
