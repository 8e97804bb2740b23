import json
import subprocess
import sys
from fractions import Fraction

import pytest

from scalargvm.cli import CSV_COLUMNS, UsageError, emit, run_command
from scalargvm.exactnum import parse_rational
from scalargvm.reducibility import is_reducible, scan
from scalargvm.rootdata import LieType


def test_shape():
    assert run_command(["shape", "--seq", "5,4,1,3,2,6"]) == (0, '{"shape":[3,1,1,1]}\n')


def test_shape_oracle():
    code, out = run_command(["shape", "--seq", "-1/2,1.5,-1/2,0", "--oracle"])
    assert code == 0
    assert json.loads(out) == {"shape": [3, 1], "oracle": True}


def test_shape_oracle_too_long():
    code, out = run_command(["shape", "--seq", ",".join(["1"] * 13), "--oracle"])
    assert code == 1


def test_shape_empty_sequence():
    assert run_command(["shape", "--seq", ""]) == (0, '{"shape":[]}\n')


def test_reduce():
    code, out = run_command(["reduce", "--type", "B", "--rank", "4", "--p", "2", "--z", "-1"])
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["type", "rank", "p", "z", "gkdim", "dim_u", "reducible"]
    assert (data["gkdim"], data["dim_u"], data["reducible"]) == (13, 15, True)
    assert out == '{"type":"B","rank":4,"p":2,"z":"-1","gkdim":13,"dim_u":15,"reducible":true}\n'


def test_reduce_negative_fraction_value():
    code, out = run_command(["reduce", "--type", "C", "--rank", "3", "--p", "1", "--z", "-1/2"])
    assert code == 0
    assert json.loads(out)["gkdim"] == 5
    assert json.loads(out)["z"] == "-1/2"


@pytest.mark.parametrize(
    "argv",
    [
        ["reduce", "--type", "A", "--rank", "3", "--p", "3", "--z", "0"],
        ["reduce", "--type", "D", "--rank", "2", "--p", "1", "--z", "0"],
        ["reduce", "--type", "E", "--rank", "6", "--p", "1", "--z", "0"],
        ["frobnicate"],
        [],
        ["scan", "--type", "B", "--rank", "4", "--p", "2", "--from", "3", "--to", "1"],
        ["gkdim", "--type", "B", "--rank", "3", "--weight", "1,2"],
        ["gkdim", "--type", "B", "--rank", "3"],
        ["table", "--type", "B", "--ranks", "1:4"],
        ["table", "--type", "B", "--ranks", "x"],
    ],
)
def test_usage_errors(argv):
    code, _ = run_command(argv)
    assert code == 2


def test_malformed_rational_names_token():
    code, out = run_command(["reduce", "--type", "B", "--rank", "3", "--p", "1", "--z", "1/x"])
    assert code == 2
    assert "1/x" in out


def test_gkdim_weight():
    code, out = run_command(
        ["gkdim", "--type", "B", "--rank", "8", "--weight", "7,5,3,3.5,2.5,1.5,2.3,1.3"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["classes"] == {
        "integral": ["7", "5", "3"],
        "half": ["7/2", "5/2", "3/2"],
        "other": [["23/10", "13/10"]],
    }
    assert isinstance(data["gkdim"], int)


def test_gkdim_scalar():
    code, out = run_command(["gkdim", "--type", "A", "--rank", "3", "--p", "2", "--z", "1/5"])
    assert code == 0
    assert json.loads(out)["gkdim"] == 2


def test_scan_csv():
    argv = ["scan", "--type", "B", "--rank", "4", "--p", "2", "--class", "0",
            "--from", "-6", "--to", "6", "--format", "csv"]
    assert run_command(argv) == (0, "type,rank,p,class,first_point,paper_claim,match\nB,4,2,0,-1,-1,true\n")


def test_scan_json():
    argv = ["scan", "--type", "B", "--rank", "4", "--p", "1", "--class", "1/2",
            "--from", "-6", "--to", "6"]
    code, out = run_command(argv)
    data = json.loads(out)
    assert data["first_point"] == "-1/2" and data["match"] is True and data["monotone"]


def test_table_csv_and_json_agree():
    base = ["table", "--type", "A", "--ranks", "3:3", "--classes", "0", "--from", "-6", "--to", "6"]
    code, text = run_command(base + ["--format", "csv"])
    assert code == 0
    lines = text.splitlines()
    assert lines == [",".join(CSV_COLUMNS), "A,3,1,0,0,0,true", "A,3,2,0,0,-1,false"]
    code, text = run_command(base)
    assert json.loads(text) == [
        {"type": "A", "rank": 3, "p": 1, "class": "0", "first_point": "0", "paper_claim": "0", "match": True},
        {"type": "A", "rank": 3, "p": 2, "class": "0", "first_point": "0", "paper_claim": "-1", "match": False},
    ]


def test_emit_empty_table_is_header_only():
    assert emit([], "csv") == ",".join(CSV_COLUMNS) + "\n"


def test_emit_csv_rejects_report():
    with pytest.raises(UsageError):
        emit(is_reducible(LieType("B", 3), 1, 0), "csv")


def test_emit_report_key_order():
    out = emit(is_reducible(LieType("D", 4), 1, Fraction(-1, 2)))
    assert list(json.loads(out)) == ["type", "rank", "p", "z", "gkdim", "dim_u", "reducible"]


def test_output_is_deterministic():
    argv = ["table", "--type", "D", "--ranks", "3:4", "--format", "csv"]
    assert run_command(argv) == run_command(argv)
    assert run_command(argv) == run_command(argv + ["--jobs", "2"])


def test_rationals_round_trip():
    code, out = run_command(["scan", "--type", "C", "--rank", "4", "--p", "3", "--class", "1/3",
                             "--from", "-5/3", "--to", "7/3"])
    data = json.loads(out)
    for point in data["points"]:
        z = parse_rational(point["z"])
        assert z.denominator == 3
        from scalargvm.exactnum import format_rational
        assert format_rational(z) == point["z"]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "scalargvm.cli", "shape", "--seq", "3,2,1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"shape":[1,1,1]}\n'
    proc = subprocess.run(
        [sys.executable, "-m", "scalargvm.cli", "nope"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 2
    assert "usage" in proc.stderr
