import json

import pytest

from suqconn.cli import main

G0 = {"edges": [{"curve": "c", "lo": "0", "hi": "2", "dir": "f"}]}
G1 = {"edges": [{"curve": "c", "lo": "0", "hi": "1", "dir": "f"}, {"curve": "c", "lo": "1", "hi": "2", "dir": "f"}]}
FG0 = {"edges": [{"curve": "c", "lo": "0", "hi": "2", "dir": "f", "frame": "0"}]}
FG1 = {
    "edges": [
        {"curve": "c", "lo": "0", "hi": "1", "dir": "f", "frame": "0"},
        {"curve": "c", "lo": "1", "hi": "2", "dir": "f", "frame": "1/4"},
    ]
}
CONN = {"c:0:1:f": [["3/5", "-4/5"], ["4/5", "3/5"]], "c:1:2:f": [["0", "-1"], ["1", "0"]]}


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, data in {"g0": G0, "g1": G1, "fg0": FG0, "fg1": FG1, "conn": CONN}.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(data))
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ==== algebra subcommands ==================================================


def test_normalize(capsys):
    assert run(capsys, "normalize", "g a") == (0, "q^-1 * a g\n", "")


def test_normalize_numeric_q(capsys):
    code, out, _ = run(capsys, "--q", "1/2", "normalize", "a a*")
    assert code == 0
    assert out.strip() == "1 - 1/4 * g g*"


def test_coprod(capsys):
    assert run(capsys, "coprod", "g") == (0, "g (x) a + a* (x) g\n", "")


def test_haar(capsys):
    assert run(capsys, "haar", "--elem", "g g*") == (0, "1/(1+q^2)\n", "")


def test_haar_numeric_json(capsys):
    code, out, _ = run(capsys, "haar", "--elem", "g g*", "--at", "1/2", "--json")
    assert code == 0
    assert json.loads(out) == {"numeric": "0.8", "result": "1/(1+q^2)"}


def test_haar_on_graph(capsys, files):
    code, out, _ = run(capsys, "haar", "--graph", files["g1"], "--elem", "[g g*] (x) 1")
    assert (code, out.strip()) == (0, "1/(1+q^2)")


# ==== graph subcommands ====================================================


def test_push_plain(capsys, files):
    code, out, _ = run(capsys, "push", "--from", files["g0"], "--to", files["g1"], "--elem", "g")
    assert code == 0
    assert out.splitlines() == ["slots: c[0,1]f, c[1,2]f", "moves: Sub(c[0,2]f, 1)", "a (x) g + g (x) a*"]


def test_push_random_plan_agrees(capsys, files):
    _, fixed, _ = run(capsys, "push", "--from", files["g0"], "--to", files["g1"], "--elem", "g")
    _, rand, _ = run(capsys, "--seed", "5", "push", "--from", files["g0"], "--to", files["g1"], "--elem", "g", "--random-plan")
    assert fixed.splitlines()[-1] == rand.splitlines()[-1]


def test_push_framed(capsys, files):
    code, out, _ = run(capsys, "push", "--framed", "--from", files["fg0"], "--to", files["fg1"], "--elem", "g")
    assert code == 0
    assert "Fr(c[1,2]f, 0, 1/4)" in out
    assert out.splitlines()[-1] == "e(1/8) * a (x) g + g (x) a*"


def test_push_not_comparable(capsys, files):
    code, _, err = run(capsys, "push", "--from", files["g1"], "--to", files["g0"], "--elem", "g (x) g")
    assert code == 2
    assert err.startswith("error[graphs]:")


def test_equal(capsys, files):
    args = ["equal", "--graph1", files["g0"], "--elem1", "g", "--graph2", files["g1"]]
    assert run(capsys, *args, "--elem2", "a (x) g + g (x) a*")[:2] == (0, "equal\n")
    assert run(capsys, *args, "--elem2", "g (x) a")[:2] == (1, "not equal\n")


def test_mul(capsys, files):
    code, out, _ = run(capsys, "mul", "--graph1", files["g0"], "--elem1", "g", "--graph2", files["g1"], "--elem2", "a (x) 1")
    assert code == 0
    assert out.splitlines()[-1] == "[a^2] (x) g + q^-1 * [a g] (x) a*"


def test_eval(capsys, files):
    code, out, _ = run(capsys, "--q", "1", "eval", "--graph", files["g1"], "--elem", "a (x) 1 + 1 (x) g", "--connection", files["conn"])
    assert (code, out.strip()) == (0, "8/5")


def test_eval_needs_q1(capsys, files):
    code, _, err = run(capsys, "--q", "1/2", "eval", "--graph", files["g1"], "--elem", "a (x) 1", "--connection", files["conn"])
    assert code == 2 and err.startswith("error[")


# ==== rep and verify =======================================================


def test_rep_verify(capsys):
    code, out, _ = run(capsys, "rep", "verify")
    assert code == 0
    assert out.splitlines() == ["PASS unitary", "PASS corepresentation", "PASS conjugate_equivalence", "PASS irreducible"]


def test_rep_conjugate(capsys, tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps([["3/5", "-4/5"], ["4/5", "3/5"]]))
    code, out, _ = run(capsys, "--q", "1", "rep", "conjugate", "--matrix", str(p))
    assert code == 0
    assert out.splitlines()[1] == "g -> 12/25 * a + 9/25 * g + 16/25 * g* - 12/25 * a*"


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "coassoc")
    assert code == 0
    assert out.startswith("PASS coassoc")


def test_verify_json_is_deterministic(capsys):
    a = run(capsys, "--seed", "3", "verify", "--suite", "pbw", "--json")
    b = run(capsys, "verify", "--suite", "pbw", "--json", "--seed", "3")
    assert a == b
    report = json.loads(a[1])
    assert report["seed"] == 3 and report["passed"]
    assert report["suites"][0]["suite"] == "pbw"


# ==== errors ===============================================================


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "normalize", "g **")
    assert code == 2 and out == ""
    assert err.strip() == "error[parsing]: line 1, column 4: unexpected '*'"


def test_schema_error_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"edges": [{"curve": "c", "lo": "0", "hi": "x", "dir": "f"}]}))
    code, _, err = run(capsys, "push", "--from", str(p), "--to", str(p), "--elem", "g")
    assert code == 2
    assert err.startswith("error[graphs]: $.edges[0].hi")


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "push", "--elem", "g")[0] == 2
    assert run(capsys, "--q", "-1", "normalize", "a")[0] == 2


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "suqconn", "normalize", "g a"], capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (0, "q^-1 * a g\n")
    proc = subprocess.run([sys.executable, "-m", "suqconn", "normalize", "g **"], capture_output=True, text=True)
    assert proc.returncode == 2
