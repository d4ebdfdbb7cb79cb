import json
import os
import subprocess
import sys

import pytest

from spanbicat import cli
from spanbicat.instances import InstanceError, parse_instance

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def golden(name):
    return os.path.join(GOLDEN, name)


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_empty_instance_axioms(tmp_path, capsys):
    p = tmp_path / "empty.json"
    p.write_text("{}")
    code, out, _ = run(["check", str(p), "--suite", "axioms", "--bound", "3",
                        "--format", "json"], capsys)
    report = json.loads(out)
    assert code == 0
    assert report["summary"]["objects_checked"] == 4
    assert report["summary"]["failed"] == 0


@pytest.mark.parametrize("name,expected", [("clean.json", 0), ("corrupted.json", 1),
                                           ("malformed.json", 2)])
def test_golden_exit_codes(name, expected, capsys):
    code, out, err = run(["check", golden(name), "--bound", "2"], capsys)
    assert code == expected
    if expected == 1:
        assert "FAIL [instance] swap" in out and "left leg does not commute" in out
    if expected == 2:
        assert "outside 0..1" in err


def test_report_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        run(["check", golden("clean.json"), "--suite", "all", "--bound", "2",
             "--format", "json", "--report", str(p)], capsys)
    assert a.read_bytes() == b.read_bytes()
    assert b"time" not in a.read_bytes()


def test_bound_capped_and_negative(capsys):
    code, _, err = run(["check", golden("clean.json"), "--suite", "direct-sums",
                        "--bound", "9"], capsys)
    assert code == 0 and "capped at 6" in err
    code, _, _ = run(["check", golden("clean.json"), "--bound", "-1"], capsys)
    assert code == 2


def test_missing_file_and_bad_json(tmp_path, capsys):
    assert run(["check", str(tmp_path / "nope.json")], capsys)[0] == 2
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert run(["check", str(p)], capsys)[0] == 2


def test_compose(capsys):
    code, out, _ = run(["compose", golden("clean.json"), "R", "Q"], capsys)
    assert code == 0 and "2 <- 3 -> 1" in out
    code, _, err = run(["compose", golden("clean.json"), "Q", "R"], capsys)
    assert code == 1 and "boundary mismatch" in err
    code, _, _ = run(["compose", golden("clean.json"), "R", "nope"], capsys)
    assert code == 2
    code, out, _ = run(["compose", golden("clean.json"), "F", "F", "--iso", "F"], capsys)
    assert code == 1 and "iso to F: none" in out


def test_tabulate_and_em(capsys):
    code, out, _ = run(["tabulate", golden("clean.json"), "R"], capsys)
    assert code == 0 and "(invertible)" in out
    code, out, _ = run(["em", golden("clean.json"), "G", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["object"] == 3
    code, _, err = run(["em", golden("clean.json"), "F"], capsys)
    assert code == 1 and "no copoint" in err


def test_matrix(capsys):
    code, out, _ = run(["matrix", golden("clean.json"), "M"], capsys)
    assert code == 0 and "round trip: iso" in out
    code, out, _ = run(["matrix", golden("clean.json"), "M", "--compose", "M"], capsys)
    assert code == 0 and "agrees" in out
    code, out, _ = run(["matrix", golden("clean.json"), "R", "--rows", "B,B",
                        "--cols", "B,B"], capsys)
    assert code == 0
    code, _, _ = run(["matrix", golden("clean.json"), "R"], capsys)
    assert code == 2


def test_verify_report_catches_tampering(tmp_path, capsys):
    rep = tmp_path / "r.json"
    run(["check", golden("clean.json"), "--suite", "comonads", "--bound", "2",
         "--report", str(rep)], capsys)
    code, out, _ = run(["verify-report", str(rep)], capsys)
    assert code == 0 and "0 problems" in out
    data = json.loads(rep.read_text())
    for r in data["results"]:
        w = r["witness"]
        if isinstance(w, dict) and w.get("kind") == "cell" and len(w["map"]) > 1:
            w["map"] = [w["map"][1], w["map"][0]] + w["map"][2:]
            break
    rep.write_text(json.dumps(data))
    code, out, _ = run(["verify-report", str(rep)], capsys)
    assert code == 1 and "does not re-validate" in out


def test_console_script_entry():
    out = subprocess.run([sys.executable, "-m", "spanbicat.cli", "check", golden("malformed.json")],
                         capture_output=True, text=True)
    assert out.returncode == 2


@pytest.mark.parametrize("data,fragment", [
    ([], "JSON object"),
    ({"extra": {}}, "unknown sections"),
    ({"sets": {"A": {"size": -1}}}, "set 'A'"),
    ({"sets": {"A": 1}, "functions": {"f": {"dom": "A", "cod": "B", "table": [0]}}},
     "unknown set 'B'"),
    ({"sets": {"A": 1}, "functions": {"f": {"dom": "A", "cod": "A", "table": ["0"]}}},
     "list of integers"),
    ({"sets": {"A": 1, "B": 2}, "functions": {"f": {"dom": "A", "cod": "A", "table": [0]},
                                             "g": {"dom": "B", "cod": "A", "table": [0, 0]}},
      "spans": {"R": {"left": "f", "right": "g"}}}, "span 'R'"),
])
def test_parse_errors(data, fragment):
    with pytest.raises(InstanceError, match=fragment):
        parse_instance(data)


def test_parse_keeps_noncommuting_cell():
    with open(golden("corrupted.json")) as fh:
        inst = parse_instance(json.load(fh))
    assert inst.cells["swap"].problem() is not None
