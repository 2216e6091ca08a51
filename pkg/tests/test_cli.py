import dataclasses
import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from brieskorn import cli, invariants

GOLDEN = Path(__file__).parent / "golden"
CASES = {
    "invariants_2_3_7.json": ["invariants", "2", "3", "7"],
    "invariants_2_3_5_7.json": ["invariants", "2", "3", "5", "7"],
    "quotient_2_3_13_p5.json": ["quotient", "2", "3", "13", "--prime", "5"],
    "branched_2_3_35_p7.json": ["branched", "2", "3", "35", "--prime", "7"],
    "torus_knot_3_4_p5.json": ["torus-knot", "3", "4", "--prime", "5"],
    "root_2_3_11.dot": ["root", "2", "3", "11", "--format", "dot"],
    "root_2_3_13_p5.json": ["root", "2", "3", "13", "--prime", "5"],
    "connected_sum.json": ["connected-sum", "2,3,35", "2,5,7", "--prime", "5"],
    "table1.json": ["table1"],
}


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    code, out, _ = run(CASES[name], capsys)
    assert code == 0
    path = GOLDEN / name
    if os.environ.get("BRIESKORN_REGEN_GOLDEN"):
        path.write_text(out)
    assert out == path.read_text()


def test_output_is_deterministic_across_processes():
    argv = [sys.executable, "-m", "brieskorn.cli", "quotient", "2", "3", "13", "-p", "5"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["schema_version"] == "1"


def test_record_shape(capsys):
    _, out, _ = run(["invariants", "2", "3", "11"], capsys)
    rec = json.loads(out)
    assert set(rec) == {"schema_version", "command", "inputs", "payload"}
    assert rec["payload"]["hf_red_rank"] == 1


@pytest.mark.parametrize("argv, code", [
    (["invariants", "2"], 1),
    (["quotient", "2", "3", "7"], 1),
    (["frobnicate"], 1),
    (["invariants", "2", "4", "5"], 2),
    (["quotient", "2", "3", "7", "-p", "7"], 2),
    (["branched", "2", "3", "7", "-p", "5"], 2),
    (["connected-sum", "2,3,7", "-p", "5"], 2),
])
def test_exit_codes(argv, code, capsys):
    got, out, err = run(argv, capsys)
    assert got == code and out == "" and err


def test_property_failure_exit(monkeypatch, capsys):
    real = invariants.torus_knot_report

    def broken(a, b, c):
        return dataclasses.replace(real(a, b, c), milnor_value=Fraction(4))

    monkeypatch.setattr(invariants, "torus_knot_report", broken)
    code, out, _ = run(["torus-knot", "3", "4", "-p", "5"], capsys)
    assert code == 3 and json.loads(out)["payload"]["theta"] == "3"


def test_text_and_output_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out, _ = run(["invariants", "2", "3", "7", "--text", "--output", str(target)], capsys)
    assert code == 0 and out == ""
    lines = target.read_text().splitlines()
    assert any(line.split() == ["hf_red_rank", "1"] for line in lines)


def test_scan_small(capsys):
    code, out, _ = run(["scan", "--max-product", "1500", "--check", "kappa",
                        "--check", "symmetry", "--primes", "2..7"], capsys)
    rec = json.loads(out)
    assert code == 0 and rec["payload"]["status"] == "PASS"


def test_jsonable_big_ints_and_fractions():
    big = 2 ** 70
    assert cli.jsonable({"x": big, "y": 5, "f": Fraction(3, 4), "l": [big]}) == \
        {"x": str(big), "y": 5, "f": "3/4", "l": [str(big)]}
    assert cli.jsonable(2 ** 53 - 1) == 2 ** 53 - 1
