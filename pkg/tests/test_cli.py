import io as stdio
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from msgeo import errors
from msgeo.cli import run
from msgeo.io import dumps, load_space, round_floats


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc) if not isinstance(doc, str) else doc, encoding="utf-8")
    return str(path)


@pytest.fixture
def files(tmp_path):
    hexagon = np.c_[np.cos(np.arange(6) * np.pi / 3), np.sin(np.arange(6) * np.pi / 3)]
    return {
        "two3": write(tmp_path, "two3.json", {"labels": ["a", "b"], "matrix": [[0, 3], [3, 0]]}),
        "two5": write(tmp_path, "two5.json", {"labels": ["a", "b"], "matrix": [[0, 5], [5, 0]]}),
        "bad": write(tmp_path, "bad.json", {"labels": ["a", "b"], "matrix": [[0, 1], [2, 0]]}),
        "line": write(tmp_path, "line.json", {"metric": "euclidean", "points": [[0], [1], [3], [7]]}),
        "hexagon": write(tmp_path, "hexagon.json", {"metric": "euclidean", "points": hexagon.tolist()}),
        "path": write(tmp_path, "path.json", {"n": 3, "edges": [[0, 1], [1, 2]]}),
        "k22": write(tmp_path, "k22.json", {"p": 2, "q": 2, "edges": [[0, 0], [0, 1], [1, 0], [1, 1]]}),
        "nocover": write(tmp_path, "nocover.json", {"p": 2, "q": 1, "edges": [[0, 0]]}),
        "corr": write(tmp_path, "corr.json", {"pairs": [[0, 1], [1, 0]]}),
        "garbage": write(tmp_path, "garbage.json", "{not json"),
    }


def call(*argv):
    out, err = stdio.StringIO(), stdio.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def fails(*argv):
    code, out, err = call(*argv)
    assert code == 1 and out == ""
    return json.loads(err)


# --- examples ---------------------------------------------------------------

def test_gh_two_points(files):
    assert ok("gh", "--x", files["two3"], "--y", files["two5"]) == {"distance": 1.0}
    res = ok("gh", "--x", files["two3"], "--y", files["two5"], "--witness")
    assert res["witness"] == [[0, 0], [1, 1]]


def test_validate_reports_asymmetry(files):
    err = fails("validate", files["bad"])
    assert err["error"] == "AsymmetricAt"
    assert (err["detail"]["i"], err["detail"]["j"]) == (0, 1)
    assert ok("validate", files["two3"])["valid"] is True


def test_spectrum_by_gh(files):
    assert ok("mst-spectrum", "--space", files["line"], "--method", "gh", "--lambda", 14)["spectrum"] == [4, 2, 1]
    for method in ("edges", "partitions"):
        assert ok("mst-spectrum", "--space", files["line"], "--method", method)["spectrum"] == [4, 2, 1]


# --- every subcommand -----------------------------------------------------------

def test_hausdorff_and_count(files):
    assert ok("hausdorff", "--space", files["line"], "--a", "0,1", "--b", "3")["value"] == 7
    res = ok("count-sposition", "--space", files["hexagon"], "--a", "0,2,4", "--b", "1,3,5", "--s", 0)
    assert res["count"] == 1 and res["candidates"] == [0, 2, 4]
    res = ok("count-sposition", "--space", files["line"], "--a", "0", "--b", "2", "--s", 1,
             "--candidates", "1")
    assert res["count"] == 1


def test_gh_simplex_and_interpolate(files):
    assert ok("gh-simplex", "--x", files["two3"], "--m", 3, "--lambda", 1) == {"distance": 1.0}
    mid = ok("interpolate", "--x", files["two3"], "--y", files["two5"], "--t", 0.5)
    assert mid["matrix"] == [[0, 4], [4, 0]] and mid["labels"] == ["a|a", "b|b"]
    swapped = ok("interpolate", "--x", files["two3"], "--y", files["two5"], "--t", 0.5,
                 "--corr", files["corr"])
    assert swapped["labels"] == ["a|b", "b|a"]
    assert fails("interpolate", "--x", files["two3"], "--y", files["two5"], "--t", 2)["error"] == "TOutOfRange"


def test_trees(files):
    res = ok("mst", "--space", files["line"])
    assert res["length"] == 7 and len(res["edges"]) == 3
    res = ok("steiner", "--space", files["line"], "--m", "0,3")
    assert res["length"] == 7 and res["vertices"][0] == 0
    res = ok("steiner", "--space", files["line"], "--m", "0,2,3", "--method", "networks")
    assert res["length"] == 7 and len(res["topology"]) == 3


def test_combinatorics(files):
    res = ok("borsuk", "--space", files["line"], "--m", 2)
    assert res == {"partitionable": True, "brute_force": True}
    assert ok("clique-cover", "--graph", files["path"]) == {"theta": 2}
    assert ok("chromatic", "--graph", files["path"], "--a", 1, "--b", 1.5) == {"gamma": 2}
    assert ok("edge-covers", "--bipartite", files["k22"]) == {"count": 7}
    conf = ok("realize-config", "--bipartite", files["k22"])
    assert conf["N"] == 3 and conf["A"] == [0, 1] and conf["B"] == [2, 3]
    assert fails("realize-config", "--bipartite", files["nocover"])["error"] == "NoEdgeCover"
    assert fails("clique-cover", "--graph", files["path"], "--a", 1, "--b", 3)["error"] == "InvalidAB"


def test_selftest_quick(capsys):
    res = ok("selftest", "--scale", "quick", "--seed", 3)
    assert res["passed"] and res["seed"] == 3
    assert len(res["suites"]) == 9


# --- errors and usage -------------------------------------------------------------

def test_file_errors(files):
    assert fails("validate", "/nonexistent/x.json")["error"] == "FileNotFound"
    assert fails("validate", files["garbage"])["error"] == "ParseError"
    assert fails("clique-cover", "--graph", files["two3"])["error"] == "ParseError"


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["gh", "--x", "a.json"],
    ["gh", "--x", "a", "--y", "b", "--bogus"],
    ["selftest", "--scale", "huge"],
    ["hausdorff", "--space", "s", "--a", "x,y", "--b", "1"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == 2


def test_output_is_deterministic(files):
    first = call("gh", "--x", files["two3"], "--y", files["line"], "--witness")
    second = call("gh", "--x", files["two3"], "--y", files["line"], "--witness")
    assert first == second


def test_console_script(files):
    proc = subprocess.run([sys.executable, "-m", "msgeo.cli", "gh", "--x", files["two3"],
                           "--y", files["two5"]], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"distance": 1.0}
    proc = subprocess.run([sys.executable, "-m", "msgeo.cli", "validate", files["bad"]],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and json.loads(proc.stderr)["error"] == "AsymmetricAt"


# --- io helpers ----------------------------------------------------------------------

def test_round_floats():
    assert round_floats(1 / 3) == 0.333333333333
    assert round_floats([np.float64(2.0), np.int64(3), {"x": np.array([0.1 + 0.2])}]) == [2.0, 3, {"x": [0.3]}]
    assert round_floats(math.inf) == "inf" and round_floats(math.nan) is None
    assert dumps({"b": 1, "a": -0.0}) == '{"a": 0.0, "b": 1}'


def test_point_cloud_metrics(tmp_path):
    path = write(tmp_path, "p.json", {"metric": "linf", "points": [[0, 0], [1, 3]]})
    assert load_space(path).dist[0, 1] == 3
    path = write(tmp_path, "q.json", {"metric": "taxicab", "points": [[0, 0], [1, 3]]})
    with pytest.raises(errors.InvalidParams):
        load_space(path)


def test_tolerance_from_environment(tmp_path, monkeypatch):
    path = write(tmp_path, "near.json", {"matrix": [[0, 10], [10.5, 0]]})
    assert fails("validate", path)["error"] == "AsymmetricAt"
    monkeypatch.setenv("MSGEO_TOLERANCE", "1")
    assert ok("validate", path)["valid"] is True
