"""End-to-end checks of the gaprec CLI: JSON shapes, exit codes, determinism.

The binary path comes from the GAPREC_CLI environment variable (set by the
ctest registration); the suite is skipped when it is absent.
"""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("GAPREC_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="GAPREC_CLI not set")


def run(*args, stdin=None, env=None):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    return subprocess.run([CLI, *args], input=stdin, env=merged,
                          capture_output=True, text=True)


def payload(proc):
    assert proc.stdout.endswith("\n")
    return json.loads(proc.stdout)


def test_gaps():
    proc = run("gaps", "--gen", "3,5")
    assert proc.returncode == 0
    doc = payload(proc)
    assert doc["command"] == "gaps"
    assert doc["result"]["gaps"] == [1, 2, 4, 7]
    assert doc["result"]["frobenius"] == 7
    assert doc["metadata"]["version"]

    empty = payload(run("gaps", "--gen", "1"))
    assert empty["result"]["gaps"] == []
    assert empty["result"]["frobenius"] is None


def test_gcd_failure_suggests_reduce():
    proc = run("gaps", "--gen", "4,6")
    assert proc.returncode == 1
    assert "gcd(4,6)=2; try --reduce" in proc.stderr

    reduced = payload(run("gaps", "--gen", "4,6", "--reduce"))
    assert reduced["result"]["generators"] == [2, 3]


def test_reduce():
    doc = payload(run("reduce", "--gen", "4,6"))
    assert doc["result"]["generators"] == [2, 3]
    assert doc["result"]["gcd"] == 2


def test_recurrence():
    doc = payload(run("recurrence", "--gen", "2,3", "--deg", "7"))
    assert doc["result"]["sequence"] == ["1", "0", "1", "1", "1", "2", "2", "3"]
    assert doc["result"]["zeros"] == [1]
    assert doc["result"]["alpha"] == ["0", "-1", "-1"]

    halves = payload(run("recurrence", "--gen", "3,5", "--weights", "1/2,1/2", "--deg", "8"))
    assert halves["result"]["zeros"] == [1, 2, 4, 7]

    bad = run("recurrence", "--gen", "2,3", "--weights", "1,0")
    assert bad.returncode == 1


def test_verify_exit_codes():
    assert run("verify", "--gen", "3,5").returncode == 0
    assert run("verify", "--gen", "1").returncode == 0
    redundant = payload(run("verify", "--gen", "2,3,4,5", "--weights", "1,2,3,4"))
    assert redundant["result"]["zeros_match_gaps"] is True
    assert redundant["result"]["series_matches_recurrence"] is True


def test_series_defaults_to_generating_function():
    doc = payload(run("series", "--gen", "3,5", "--deg", "8"))
    assert doc["result"]["coefficients"] == ["1", "0", "0", "1", "0", "1", "1", "0", "2"]
    power = payload(run("series", "--gen", "2,3", "--t", "2", "--deg", "6"))
    assert power["result"]["support"] == [4, 5, 6]


def test_simulate_determinism_across_workers():
    args = ("simulate", "--gen", "2,3", "--walks", "20000", "--max", "10", "--seed", "42")
    one = run(*args, env={"GAPREC_THREADS": "1"})
    four = run(*args, env={"GAPREC_THREADS": "4"})
    repeat = run(*args, env={"GAPREC_THREADS": "1"})
    assert one.returncode == 0
    assert one.stdout == four.stdout == repeat.stdout

    doc = payload(one)
    states = doc["result"]["states"]
    assert states[0]["hits"] == 20000
    assert states[1]["hits"] == 0
    assert doc["metadata"]["rng"] == "splitmix64"
    assert doc["metadata"]["seed"] == 42

    other = run(*args[:-1], "43")
    assert other.stdout != one.stdout


def test_simulate_unit_semigroup():
    doc = payload(run("simulate", "--gen", "1", "--walks", "10", "--max", "5", "--seed", "7"))
    assert [s["hits"] for s in doc["result"]["states"]] == [10] * 6


def test_witness_certify_pipe():
    witness = run("witness", "--order", "5", "--set", "1,2,4,7")
    assert witness.returncode == 0
    doc = payload(witness)
    assert doc["result"]["certificate"]["generators"] == [3, 5]

    certified = run("certify", stdin=witness.stdout)
    assert certified.returncode == 0
    assert payload(certified)["result"]["certified"] is True

    # tampering must be caught, with exit code 2
    tampered = json.loads(witness.stdout)
    tampered["result"]["certificate"]["target_set"] = [1, 2, 3]
    rejected = run("certify", stdin=json.dumps(tampered))
    assert rejected.returncode == 2
    assert payload(rejected)["result"]["certified"] is False


def test_witness_not_found_exit_code():
    proc = run("witness", "--order", "3", "--set", "1,2")
    assert proc.returncode == 3
    doc = payload(proc)
    assert doc["result"]["found"] is False
    assert "search failure" in doc["result"]["reason"]

    empty = run("witness", "--order", "5", "--set", "")
    assert empty.returncode == 1


def test_invalid_json_certificate():
    proc = run("certify", stdin="{ not json")
    assert proc.returncode == 1
