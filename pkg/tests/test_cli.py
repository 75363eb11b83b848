import json
import subprocess
import sys

import pytest

from tamedeg.cli import main
from tamedeg.construct import decide, verdict_from_json
from tamedeg.poly import PolyMap, Polynomial
from tamedeg.reduction import ReductionWitness
from tamedeg.tame import TameWord


def run(capsys, *argv):
    try:
        code = main([str(a) for a in argv])
    except SystemExit as exc:   # argparse usage errors
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def witness358(tmp_path, capsys):
    path = tmp_path / "witness358.json"
    code, out, _ = run(capsys, "witness", 3, 5, 8, "--out", path)
    assert code == 0 and "mdeg = (3,5,8), inverse verified" in out
    return path


GOLDEN = [
    (("decide", 5, 7, 24), 0),
    (("decide", 24, 7, 5), 0),
    (("decide", 5, 7, 23), 1),
    (("decide", 3, 5, 7), 1),
    (("decide", 4, 5, 11), 1),
    (("decide", 4, 6, 9), 2),
    (("decide", 5, 7, "x"), 2),
    (("decide", 0, 5, 7), 2),
    (("witness", 3, 5, 7), 1),
    (("witness", 1, 1, 1), 0),
    (("witness", 5, 3, 8), 2),
    (("frobenius", 5, 7), 0),
    (("frobenius", 4, 6), 2),
    (("frobenius", 1, 6), 2),
    (("gaps", 5, 11, "--min", 11), 0),
    (("gaps", 4, 6), 2),
    (("member", 5, 7, "--target", 24), 0),
    (("member", 5, 7, "--target", 23), 1),
    (("table", "--pair", "5,11", "--paper-diff"), 0),
    (("table", "--pair", "3,7", "--paper-diff"), 2),
    (("table", "--pair", "4,6"), 2),
    (("table", "--three", 11, "--paper-diff"), 0),
    (("table", "--three", 9), 2),
    (("table",), 2),
    (("fuzz", "--count", 3), 2),
    (("fuzz", "--count", 5, "--seed", 1), 0),
    (("verify", "/nonexistent/word.json"), 2),
]


@pytest.mark.parametrize("argv,expected", GOLDEN)
def test_exit_code_matrix(capsys, argv, expected):
    assert run(capsys, *argv)[0] == expected


def test_decide_text(capsys):
    code, out, _ = run(capsys, "decide", 5, 7, 24)
    assert "member: 24 = 2·5 + 2·7" in out
    code, out, _ = run(capsys, "decide", 24, 5, 7)
    assert out.startswith("input (24,5,7) sorted to (5,7,24)")
    code, out, _ = run(capsys, "decide", 5, 7, 23)
    assert out.startswith("nonmember") and "< 24" in out and "FAILURE" not in out


def test_semigroup_text(capsys):
    assert run(capsys, "frobenius", 5, 7)[1] == "23\n"
    assert run(capsys, "frobenius", 7, 11)[1] == "59\n"
    assert run(capsys, "gaps", 5, 11, "--min", 11)[1] == "12, 13, 14, 17, 18, 19, 23, 24, 28, 29, 34, 39\n"
    assert run(capsys, "member", 5, 7, "--target", 24)[1] == "24 = 2·5 + 2·7\n"


def test_table_diffs(capsys):
    assert run(capsys, "table", "--pair", "5,11", "--paper-diff")[1].endswith("match: exact\n")
    assert "discrepancy: paper lists 21; 21 = 3·7 is representable" in \
        run(capsys, "table", "--pair", "5,7", "--paper-diff")[1]
    assert run(capsys, "table", "--pair", "7,11", "--paper-diff")[1].endswith(
        "discrepancy: paper repeats 45\n")


def test_table_output_is_deterministic():
    cmd = [sys.executable, "-m", "tamedeg", "table", "--pair", "7,11", "--paper-diff"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and b"repeats 45" in first


def test_verify_and_reduce_witness(capsys, witness358):
    code, out, _ = run(capsys, "verify", witness358)
    assert code == 0 and out.startswith("pass: mdeg = (3,5,8)")
    code, out, _ = run(capsys, "reduce", witness358, "--target", 3, "--budget", 8)
    assert code == 0 and out.startswith("g = u*v") and "8 -> 1" in out


def test_reduce_identity_none(capsys, tmp_path):
    path = tmp_path / "identity.json"
    path.write_text(json.dumps(PolyMap.identity(3).to_json()))
    code, out, _ = run(capsys, "reduce", path, "--target", 3, "--budget", 1)
    assert code == 1 and "none within budget 1" in out
    assert run(capsys, "reduce", path, "--target", 3, "--budget", 0)[0] == 2
    assert run(capsys, "reduce", path, "--target", 4)[0] == 2


@pytest.mark.parametrize("content", [
    "not json",
    "[1, 2]",
    '{"n": 3}',
    '{"n": 3, "factors": [{"type": "elementary", "index": 1, "addend": {"nvars": 3, "terms": [{"c": "1", "e": [1, 0, 0]}]}}]}',
    '{"n": 3, "factors": [{"type": "linear", "matrix": [["1","2","0"],["2","4","0"],["0","0","1"]]}]}',
    '{"n": 3, "factors": [{"type": "mystery"}]}',
])
def test_malformed_files_exit_2(capsys, tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    assert run(capsys, "verify", path)[0] == 2
    assert run(capsys, "reduce", path, "--target", 1)[0] == 2


def test_json_outputs_round_trip(capsys, witness358):
    code, out, _ = run(capsys, "decide", 5, 7, 24, "--json")
    data = json.loads(out)
    assert data["input"] == [5, 7, 24]
    del data["input"]
    assert verdict_from_json(data) == decide(5, 7, 24)

    for triple in [(5, 7, 23), (3, 5, 7), (4, 6, 9)]:
        data = json.loads(run(capsys, "decide", *triple, "--json")[1])
        del data["input"]
        assert verdict_from_json(data) == decide(*triple)

    code, out, _ = run(capsys, "--json", "witness", 3, 5, 8)
    word = TameWord.from_json(json.loads(out)["witness"])
    assert json.loads(witness358.read_text()) == word.to_json()

    code, out, _ = run(capsys, "reduce", witness358, "--target", 3, "--json")
    w = ReductionWitness.from_json(json.loads(out))
    assert w.g == Polynomial.parse("x1*x2", 2) and w.to_json() == json.loads(out)

    code, out, _ = run(capsys, "verify", witness358, "--json")
    report = json.loads(out)
    assert report["passed"] and report["mdeg"] == [3, 5, 8]
    assert Polynomial.from_json(report["jacobian_det"]) == Polynomial.const(3, 1)
    assert PolyMap.from_json(report["map"]).to_json() == report["map"]


def test_reduce_accepts_polymap_file(capsys, tmp_path):
    x1, x2, x3 = Polynomial.gens(3)
    path = tmp_path / "map.json"
    path.write_text(json.dumps(PolyMap([x1, x2, x3 + x1**2]).to_json()))
    code, out, _ = run(capsys, "reduce", path, "--target", 3, "--budget", 2)
    assert code == 0 and out.startswith("g = u^2")
