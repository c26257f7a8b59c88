"""CLI contract tests: flags, exit codes, output formats."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("GOLDENMEAN_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="GOLDENMEAN_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


def test_compute_terms_plain():
    r = run("compute", "--n", "2", "--series", "alpha", "--terms", "2")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "1.6875"
    assert "error_bound_exponent 0" in lines


def test_compute_digits_matches_constant():
    r = run("compute", "--n", "3", "--series", "alpha", "--digits", "20")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "1.83928675521416113255"


def test_compute_domain_error_exit_3():
    r = run("compute", "--n", "1", "--series", "beta", "--terms", "5")
    assert r.returncode == 3
    assert r.stderr


def test_compute_flag_misuse_exit_2():
    assert run("compute", "--n", "2", "--series", "alpha").returncode == 2
    assert (
        run("compute", "--n", "2", "--series", "alpha", "--terms", "3", "--digits", "4").returncode
        == 2
    )
    assert run("compute", "--n", "2", "--series", "phi", "--terms", "3").returncode == 2


def test_plain_and_json_values_agree_byte_for_byte():
    plain = run("compute", "--n", "2", "--series", "gap", "--terms", "7")
    j = run("compute", "--n", "2", "--series", "gap", "--terms", "7", "--format", "json")
    assert plain.returncode == 0 and j.returncode == 0
    record = json.loads(j.stdout)
    assert record["value"] == plain.stdout.splitlines()[0]
    assert set(record) == {
        "n",
        "series",
        "terms",
        "digits_requested",
        "value",
        "error_bound_exponent",
        "elapsed_ms",
    }
    assert record["digits_requested"] is None
    assert record["terms"] == 7


def test_oracle_values():
    r = run("oracle", "--n", "5", "--digits", "20", "--target", "alpha")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "1.96594823664548533719"

    r = run("oracle", "--n", "2", "--digits", "10", "--target", "gap")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "2.6180339887"


def test_oracle_zero_digits_exit_2():
    assert run("oracle", "--n", "2", "--digits", "0").returncode == 2


def test_table1_row():
    r = run("table", "--which", "1", "--format", "csv")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "n,alpha"
    assert "4,1.92756197548292530426" in lines


def test_table2_single_row_csv():
    r = run("table", "--which", "2", "--rows", "2:100", "--format", "csv")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "n,k,predicted,actual_alpha,actual_beta,actual_gap"
    assert lines[1] == "2,100,7,10,10,9"


def test_table2_json_schema():
    r = run("table", "--which", "2", "--rows", "2:100", "--format", "json")
    assert r.returncode == 0
    rows = json.loads(r.stdout)
    assert rows == [
        {"n": 2, "k": 100, "predicted": 7, "actual_alpha": 10, "actual_beta": 10, "actual_gap": 9}
    ]


def test_table_rows_with_table1_is_usage_error():
    assert run("table", "--which", "1", "--rows", "2:100").returncode == 2


def test_verify_small_grid_passes():
    r = run("verify", "--n-max", "4", "--k-max", "10", "--bits", "128")
    assert r.returncode == 0, r.stdout + r.stderr
    assert "all suites passed" in r.stdout


def test_verify_flag_validation():
    assert run("verify", "--n-max", "1").returncode == 2
