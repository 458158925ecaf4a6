"""End-to-end smoke tests: the module imports, the exact tables match
known values, the suites pass, and the installed CLI binary honors its
exit-code contract."""

import json
import os
import subprocess

import pytest

import stablemaps as sm


def test_hilbert_tables():
    assert sm.hilbert("projective_space", 4, 4) == [1, 1, 1, 1, 1]
    assert sm.hilbert("grassmannian_lines", 3, 4) == [1, 1, 2, 1, 1]
    assert sm.hilbert("flag_d1", 2, 3) == [1, 2, 2, 1]
    assert sm.hilbert("m01_pn_d2", 2, 6) == [1, 4, 9, 12, 10, 5, 1]


def test_invariant_dimensions_palindromic():
    dims = sm.invariant_hilbert(2, 6)
    assert dims == dims[::-1]
    assert sm.invariant_hilbert(1, 3) == [1, 2, 2, 1]


def test_ring_json_roundtrip():
    ring = json.loads(sm.ring_json("m01_pn_d2", 1))
    assert [g["name"] for g in ring["generators"]] == ["D2", "D1", "H", "psi"]
    assert len(ring["relations"]) == 7
    assert "kH3" in ring["derived"]


def test_schedule_json():
    sched = json.loads(sm.schedule_json(5))
    blow_downs = [s for s in sched["stages"] if s["kind"] == "blow-down"]
    assert len(blow_downs) == 2
    sched = json.loads(sm.schedule_json(2, 2))
    assert sched["stages"][0]["contracted"] == ["D({3},1|{1,2},1)"]


def test_verify_suite():
    rows = sm.verify("lemma31", d=1, n=3)
    assert len(rows) == 1
    assert rows[0]["pass"] is True

    rows = sm.verify("kappa")
    assert all(r["pass"] for r in rows)


def test_unknown_names_raise():
    with pytest.raises(sm.WorkbenchError):
        sm.ring_json("nonsense", 2)
    with pytest.raises(sm.WorkbenchError):
        sm.verify("nonsense")


@pytest.fixture(scope="module")
def cli():
    path = os.environ.get("SMW_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("SMW_CLI not set")
    return path


def test_cli_contract(cli):
    done = subprocess.run(
        [cli, "verify", "lemma31", "--d", "1", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert done.returncode == 0
    assert "1/1 checks pass" in done.stdout

    done = subprocess.run(
        [cli, "schedule", "--d", "5", "--m", "0", "--format", "json"],
        capture_output=True,
        text=True,
    )
    sched = json.loads(done.stdout)
    assert sum(1 for s in sched["stages"] if s["kind"] == "blow-down") == 2

    usage = subprocess.run([cli, "schedule"], capture_output=True, text=True)
    assert usage.returncode == 2
