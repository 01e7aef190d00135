import json
import subprocess
import sys

import pytest

from s2b.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dims_csv(capsys):
    code, out, _ = run(capsys, "dims", "--n-max", "5", "--format", "csv")
    assert code == EXIT_PASS
    assert out == "n,dim\n1,1\n2,2\n3,4\n4,9\n5,23\n"


def test_text_format(capsys):
    code, out, _ = run(capsys, "identities", "--n", "4")
    assert code == EXIT_PASS
    assert out.splitlines()[-1].startswith("identities n=4: pass")
    assert all(line.split()[0] in {"PASS", "INFO", "WARN", "identities"} for line in out.splitlines())


def test_json_deterministic_is_byte_stable(capsys):
    _, a, _ = run(capsys, "bounds", "--n", "4", "--format", "json", "--deterministic")
    _, b, _ = run(capsys, "bounds", "--n", "4", "--format", "json", "--deterministic")
    assert a == b
    data = json.loads(a)
    assert data["suite"] == "bounds" and data["verdict"] == "pass" and data["millis"] == 0


def test_generic_csv(capsys):
    code, out, _ = run(capsys, "counterexamples", "--n", "4", "--format", "csv")
    assert code == EXIT_PASS
    header, row = out.splitlines()
    assert header == "suite,n,id,input,expected,got,pass"
    assert row.endswith(",true")


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "fuse", "--n", "3", "--format", "json", "--out", str(path))
    assert code == EXIT_PASS and out == ""
    assert json.loads(path.read_text())["verdict"] == "pass"


def test_usage_errors(capsys):
    assert run(capsys, "identities")[0] == EXIT_USAGE
    assert run(capsys, "identities", "--n", "0")[0] == EXIT_USAGE
    code, _, err = run(capsys, "dims", "--n-max", "8")
    assert code == EXIT_USAGE and "--long-run" in err
    assert run(capsys, "counterexamples", "--n", "6", "--explore")[0] == EXIT_USAGE
    with pytest.raises(SystemExit):
        main(["no-such-suite"])


def test_long_run_gates(capsys):
    for cmd, n in (("identities", 9), ("bounds", 8), ("fuse", 7), ("hecke", 8), ("one-sided", 8), ("nilpotency", 10)):
        assert run(capsys, cmd, "--n", str(n))[0] == EXIT_USAGE


def test_one_sided_warning_exit(capsys):
    code, out, _ = run(capsys, "one-sided", "--n", "4")
    assert code == EXIT_PASS and "WARN" in out


@pytest.mark.slow
def test_quadratic_battery_fails_honestly(capsys):
    code, out, _ = run(capsys, "quadratic", "--n-max", "6")
    assert code == EXIT_FAIL
    assert "FAIL quadratic" in out and "m=6 -> [6]" in out


def test_all(capsys):
    code, out, _ = run(capsys, "all", "--n", "4", "--format", "json", "--deterministic")
    assert code == EXIT_PASS
    reports = json.loads(out)
    assert {r["suite"] for r in reports} >= {"identities", "bounds", "fuse", "hecke", "dims"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "s2b", "nilpotency", "--n", "5", "--format", "json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "pass"
