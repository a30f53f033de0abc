import io
import json
import subprocess
import sys

import pytest

from fintopo.cli import dispatch


def run(argv):
    buf = io.StringIO()
    code = dispatch(argv, buf)
    return code, json.loads(buf.getvalue()) if buf.getvalue() else None


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


@pytest.fixture
def example3(tmp_path):
    space = {"points": ["x", "y", "z", "w"], "opens": [[], ["x"], ["y"], ["z", "w"], ["x", "y"],
                                                       ["x", "z", "w"], ["y", "z", "w"], ["x", "y", "z", "w"]]}
    rel = {"pairs": [["x", "x"], ["y", "y"], ["z", "z"], ["w", "w"], ["x", "y"], ["y", "z"], ["z", "w"]]}
    return write(tmp_path, "s.json", space), write(tmp_path, "r.json", rel)


def test_check_report(example3):
    s, r = example3
    code, rep = run(["check", "--space", s, "--relation", r])
    assert code == 0
    assert rep["schema_version"] == "1"
    assert rep["space"]["components"] == [["x"], ["y"], ["z", "w"]]
    assert rep["topology"]["verdicts"]["continuous"] is False
    assert rep["order"]["verdicts"]["T"] is False
    assert set(rep["inputs"]) == {"space", "relation"}
    assert "total_seconds" in rep["timing"]


def test_check_is_deterministic_modulo_timing(example3):
    s, r = example3
    _, a = run(["check", "--space", s, "--relation", r])
    _, b = run(["check", "--space", s, "--relation", r])
    a.pop("timing"), b.pop("timing")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_check_rejects_bad_input(tmp_path, example3):
    s, r = example3
    bad_space = write(tmp_path, "bad.json", {"points": [0, 1], "opens": [[0]]})
    assert run(["check", "--space", bad_space, "--relation", r])[0] == 2
    bad_rel = write(tmp_path, "badr.json", {"pairs": [["x", "q"]]})
    assert run(["check", "--space", s, "--relation", bad_rel])[0] == 2
    assert run(["check", "--space", s, "--relation", r, "--k", "9"])[0] == 2
    assert run(["check", "--space", str(tmp_path / "missing.json"), "--relation", r])[0] == 2
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(["check", "--space", str(junk), "--relation", r])[0] == 2


def test_enumerate():
    code, rep = run(["enumerate", "--n", "3", "--count-only"])
    assert code == 0 and rep["count"] == 29
    code, rep = run(["enumerate", "--n", "2"])
    assert len(rep["spaces"]) == 4
    code, rep = run(["enumerate", "--n", "3", "--connected-only", "--count-only"])
    assert rep["count"] == 19
    assert run(["enumerate", "--n", "9"])[0] == 2


def test_verify():
    code, rep = run(["verify", "--claim", "P1.a", "--max-n", "3"])
    assert code == 0
    assert rep["outcomes"][0]["hits"] == 512 and rep["outcomes"][0]["passed"]
    assert run(["verify", "--claim", "nope"])[0] == 2


def test_verify_reports_identical_across_shards():
    _, a = run(["verify", "--claim", "T5.a.i", "--max-n", "3", "--shards", "1"])
    _, b = run(["verify", "--claim", "T5.a.i", "--max-n", "3", "--shards", "8"])
    assert a["outcomes"] == b["outcomes"]


def test_verify_budget_exhaustion_exits_one():
    code, rep = run(["verify", "--claim", "L1", "--max-n", "4", "--budget", "0"])
    assert code == 1 and rep["outcomes"][0]["complete"] is False


def test_witness_round_trip(tmp_path):
    space = {"points": ["a", "b", "c"], "opens": [[], ["a"], ["b", "c"], ["a", "b", "c"]]}
    s = write(tmp_path, "s.json", space)
    code, rep = run(["witness", "--space", s, "--construction", "product"])
    assert code == 0 and all(rep["post_check"].values())
    r = write(tmp_path, "w.json", rep["relation"])
    code, chk = run(["check", "--space", s, "--relation", r])
    v = chk["topology"]["verdicts"]
    assert v["continuous"] and chk["order"]["verdicts"]["T"] and not chk["order"]["verdicts"]["complete"]


def test_witness_precondition(tmp_path):
    s = write(tmp_path, "s.json", {"points": [0, 1], "opens": [[], [0, 1]]})
    assert run(["witness", "--space", s, "--construction", "chain"])[0] == 2


def test_search_exit_codes():
    code, rep = run(["search", "--hypotheses", "PP,II", "--conclusion", "PI", "--max-n", "3"])
    assert code == 1 and rep["found"] and rep["n"] == 3
    code, rep = run(["search", "--hypotheses", "complete,PP,PI", "--conclusion", "T", "--max-n", "3"])
    assert code == 0 and not rep["found"]
    assert run(["search", "--hypotheses", "PP", "--conclusion", "bogus", "--max-n", "2"])[0] == 2


def test_fixtures_and_claims():
    code, rep = run(["fixtures", "--group", "prop1-d"])
    assert code == 0 and len(rep["fixtures"]) == 8
    code, rep = run(["claims"])
    assert code == 0 and any(c["id"] == "P3.vac" for c in rep["claims"])


def test_usage_error():
    assert run(["verify"])[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fintopo", "enumerate", "--n", "2", "--count-only"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["count"] == 4
