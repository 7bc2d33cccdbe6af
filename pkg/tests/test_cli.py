import json
import subprocess
import sys

import pytest

from gencheb import cli, verify
from gencheb.chebyshev import PRINTED_TABLES
from gencheb.exactalg import from_json_obj, parse_poly


def run(capsys, *argv):
    status = cli.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_tables_rank3_matches_printed_rows(capsys):
    status, out, _ = run(capsys, "tables", "--rank", "3", "--max-n", "5")
    assert status == 0
    data = json.loads(out)
    assert data["rank"] == "3"
    for n, text in PRINTED_TABLES[3].items():
        entry = data["table"][str(n)]
        assert parse_poly(entry["poly"]) == parse_poly(text)
        assert from_json_obj(entry["terms"]) == parse_poly(text)


def test_tables_tsv(capsys):
    status, out, _ = run(capsys, "tables", "--max-n", "3", "--format", "tsv")
    assert status == 0
    assert out.splitlines() == ["#rank\tinf", "#n\tpolynomial", "1\tt0", "2\tt0*t1 - 1", "3\tt0*t1*t2 - t0 - t2"]


def test_tables_errata_flags_rank1(capsys):
    status, out, _ = run(capsys, "tables", "--rank", "1", "--max-n", "5", "--errata")
    assert status == 0
    flagged = json.loads(out)["errata"]
    assert [(e["rank"], e["n"]) for e in flagged] == [("1", 5)]
    status, out, _ = run(capsys, "tables", "--rank", "4", "--max-n", "5", "--errata")
    assert json.loads(out)["errata"] == []


def test_errata_command(capsys):
    status, out, _ = run(capsys, "errata")
    assert status == 0
    assert [(e["rank"], e["n"]) for e in json.loads(out)["errata"]] == [("1", 5)]


def test_char_module(capsys):
    status, out, _ = run(capsys, "char", "--r", "2", "--module", "0,2")
    assert status == 0
    (entry,) = json.loads(out)["characters"]
    assert entry["module"] == "S(0,2)"
    assert parse_poly(entry["poly"]) == parse_poly("u0^-1*u1^-1 + u0^-1 + u1^-1")


def test_char_table(capsys):
    status, out, _ = run(capsys, "char", "--r", "3", "--table")
    assert status == 0
    assert [e["module"] for e in json.loads(out)["characters"]] == [
        "S(0,1)", "S(0,2)", "S(0,3)", "S(1,1)", "S(1,2)", "S(2,1)",
    ]


@pytest.mark.parametrize("argv", [
    ["char", "--r", "0", "--table"],
    ["char", "--r", "3", "--module", "2,2"],
    ["char", "--r", "3", "--module", "zero"],
    ["tables", "--rank", "0"],
    ["tables", "--max-n", "-1"],
    ["verify", "nosuch"],
    ["verify", "tube-mult", "--p", "0"],
    ["frieze", "--shape", "disk:r=1", "--seeds", "x"],
    ["frieze", "--shape", "tube:p=2,nmax=2", "--seeds", "x0,1"],
    ["frieze", "--shape", "tube:p=2,nmax=2", "--seeds", "1,2,3"],
    ["frieze", "--shape", "moebius:r=2", "--seeds", "x"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2
    assert out == ""
    assert err


def test_usage_error_names_flag(capsys):
    _, _, err = run(capsys, "char", "--r", "0", "--table")
    assert "--r" in err


def test_help_lists_suites(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--help"])
    assert exc.value.code == 0
    out = capsys.readouterr().out
    for suite in verify.SUITES + ("all",):
        assert suite in out


def test_frieze_symbolic(capsys):
    status, out, _ = run(capsys, "frieze", "--shape", "tube:p=3,nmax=4", "--seeds", "x")
    assert status == 0
    labels = {(e["i"], e["n"]): e["label"] for e in json.loads(out)["labels"]}
    assert len(labels) == 12
    assert parse_poly(labels[(0, 3)]) == parse_poly("x0*x1*x2 - x0 - x2")


def test_frieze_rational_and_moebius(capsys):
    status, out, _ = run(capsys, "frieze", "--shape", "tube:p=2,nmax=3", "--seeds", "2,3/2")
    assert status == 0
    labels = {(e["i"], e["n"]): e["label"] for e in json.loads(out)["labels"]}
    assert labels[(0, 2)] == "2"
    status, out, _ = run(capsys, "frieze", "--shape", "moebius:r=2", "--seeds", "1,2")
    assert status == 0
    assert [e["label"] for e in json.loads(out)["labels"]] == ["1", "2", "2", "1", "3"]


def test_frieze_degenerate_seeds_exit_1(capsys):
    status, out, err = run(capsys, "frieze", "--shape", "tube:p=2,nmax=4", "--seeds", "1,1")
    assert status == 1 and "DegenerateSample" in err


def test_verify_presentations(capsys):
    status, out, _ = run(capsys, "verify", "presentations", "--max-r", "4")
    assert status == 0
    rep = json.loads(out)
    assert rep["ok"] and rep["failures"] == [] and rep["instances_checked"] > 0


def test_verify_small_suites(capsys):
    for argv in (["tube-mult", "--p", "3", "--max-len", "4"], ["wild-mult", "--max-len", "5"],
                 ["chebyshev-routes", "--max-n", "6", "--max-rank", "3"],
                 ["moebius", "--max-r", "2", "--trials", "5"]):
        status, out, _ = run(capsys, "verify", *argv, "--jobs", "1")
        assert status == 0, argv
        assert json.loads(out)["suite"] == argv[0]


def test_verify_failure_exit_1(capsys, monkeypatch):
    monkeypatch.setattr(verify, "worked_example", lambda: False)
    status, out, err = run(capsys, "verify", "tube-mult", "--p", "2", "--max-len", "3", "--jobs", "1")
    assert status == 1
    rep = json.loads(out)
    assert rep["failures"] == ["worked-example:p=4"]
    assert "FAIL worked-example:p=4" in err


def test_jobs_env(monkeypatch):
    monkeypatch.setenv(verify.JOBS_ENV, "3")
    assert verify.default_jobs() == 3
    monkeypatch.setenv(verify.JOBS_ENV, "0")
    with pytest.raises(ValueError):
        verify.default_jobs()


def test_bad_jobs_env_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv(verify.JOBS_ENV, "many")
    status, _, err = run(capsys, "verify", "wild-mult", "--max-len", "3")
    assert status == 2 and verify.JOBS_ENV in err


def test_parallel_matches_serial():
    assert verify.suite_wild_mult(6, jobs=1) == verify.suite_wild_mult(6, jobs=2)
    assert verify.suite_tube_mult(3, 5, jobs=1) == verify.suite_tube_mult(3, 5, jobs=2)


def test_module_entry_point_deterministic():
    cmd = [sys.executable, "-m", "gencheb", "verify", "chebyshev-routes", "--max-n", "6", "--max-rank", "3"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout
    assert b"elapsed" in a.stderr and b"elapsed" not in a.stdout
