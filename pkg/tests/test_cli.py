import io
import json
import subprocess
import sys

import pytest

from strongeq.cli import run
from strongeq.graphs import parse_graph


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return {
        "tri": write("tri.g", "a b\nb c\nc a\n"),
        "path": write("path.g", "a b\nb c\nc d\n"),
        "star": write("star.g", "a b\na c\na d\n"),
        "c5": write("c5.g", "a b\nb c\nc d\nd e\ne a\n"),
        "bad": write("bad.g", "a b c\n"),
        "loop": write("loop.g", "a a\n"),
        "empty": write("empty.g", "# nothing\n"),
        "p5": write("p5.g", "v w\nw x\nx y\ny z\n"),
        "family": write("fam.txt", "a b c\na\na b\na c\na b c\n"),
        "write": write,
    }


def test_decide_identical(files):
    assert call(["decide", "--property", "ham", files["tri"], files["tri"]])[:2] == (0, "EQUIVALENT\n")


def test_decide_kconn_spanning_trees(files):
    code, out, _ = call(["decide", "--property", "kconn:2", files["path"], files["star"]])
    assert (code, out) == (1, "NOT-EQUIVALENT\n")


def test_decide_unknown_pattern(files, tmp_path):
    k5 = files["write"]("k5.g", "\n".join(f"{u} {v}" for i, u in enumerate("abcde") for v in "abcde"[i + 1:]))
    k5e = files["write"]("k5e.g", "\n".join(f"{u} {v}" for i, u in enumerate("abcde")
                                             for v in "abcde"[i + 1:] if (u, v) != ("a", "b")))
    code, out, _ = call(["decide", "--property", f"subgraph:{files['p5']}", k5, k5e])
    assert (code, out) == (2, "UNKNOWN\n")


def test_reduce_then_decide(files, tmp_path):
    code, out, _ = call(["reduce", "kcolor", "--k", "3", files["c5"]])
    assert code == 0
    g_text, h_text = out.split("\n\n")
    g, h = parse_graph(g_text), parse_graph(h_text)
    assert h == g.add("a", "_0")
    gp, hp = files["write"]("rg.g", g_text), files["write"]("rh.g", h_text)
    assert call(["decide", "--property", "kcolor:3", gp, hp])[:2] == (1, "NOT-EQUIVALENT\n")


def test_witness_output(files):
    code, out, _ = call(["witness", "--property", "edge2color", files["path"], files["write"]("p2.g", "a c\nc b\nb d\n")])
    assert code == 1
    header, *body = out.splitlines()
    assert header.startswith("# NOT-EQUIVALENT side=") and "construction=" in header
    assert parse_graph("\n".join(body)) is not None
    code, out, _ = call(["witness", "--property", "ham", files["tri"], files["tri"]])
    assert (code, out) == (0, "# EQUIVALENT\n")


def test_oracle_statuses(files):
    code, out, _ = call(["oracle", "--property", "ham", "--fresh", "1", files["tri"], files["tri"]])
    assert (code, out) == (0, "exhausted\n")
    code, out, _ = call(["oracle", "--property", "ham", "--fresh", "1", "--budget", "3", files["tri"], files["tri"]])
    assert (code, out) == (2, "budget\n")
    code, out, _ = call(["oracle", "--property", "kconn:2", "--fresh", "1", "--json", files["path"], files["star"]])
    rec = json.loads(out)
    assert code == 1 and rec["status"] == "found" and rec["extension"] is not None


def test_json_decide(files):
    code, out, _ = call(["decide", "--property", "planar", "--json", files["tri"], files["path"]])
    assert code == 1
    assert json.loads(out) == {"property": "planar", "verdict": "NOT-EQUIVALENT", "reason": ""}


def test_crosscheck(files):
    code, out, _ = call(["crosscheck", "--property", "ham", "--vertices", "3", "--fresh", "2"])
    assert code == 0 and "0 violations" in out
    code, out, _ = call(["crosscheck", "--property", "kconn:1", "--vertices", "4", "--samples", "20",
                         "--seed", "5", "--fresh", "1", "--max-edges", "2", "--json"])
    assert code == 0
    assert json.loads(out.splitlines()[-1])["violations"] == 0


def test_crosscheck_reports_budget_violations(files):
    code, out, _ = call(["crosscheck", "--property", "ham", "--vertices", "3", "--fresh", "2", "--budget", "1"])
    assert code == 1 and out.startswith("VIOLATION")


def test_min_subgraph(files):
    code, out, _ = call(["min-subgraph", "--k", "1", files["tri"]])
    assert code == 0 and len(out.splitlines()) == 2
    code, out, _ = call(["min-subgraph", "--k", "2", "--budget", "1", files["c5"]])
    assert code == 3 and "budget" in out


def test_setcheck(files):
    code, out, _ = call(["setcheck", files["family"]])
    assert code == 0
    assert out == "IntersectingForm X={a}\nstrengthening-fixed=true\n"
    neither = files["write"]("n.txt", "a b c\na b\n")
    assert call(["setcheck", neither])[1] == "Neither\nstrengthening-fixed=false\n"


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["decide", "--property", "kcolor:0", "x", "y"],
    ["decide", "--property", "colour", "x", "y"],
    ["decide", "x", "y"],
    ["reduce", "kcolor", "--k", "2", "x"],
])
def test_usage_errors(argv, files):
    argv = [files["tri"] if a == "x" else files["path"] if a == "y" else a for a in argv]
    code, _, err = call(argv)
    assert code == 64 and "usage error" in err


@pytest.mark.parametrize("name", ["bad", "loop", "missing"])
def test_malformed_input(files, name):
    path = files.get(name, "/nonexistent/file.g")
    code, _, err = call(["decide", "--property", "ham", path, files["tri"]])
    assert code == 65 and "input error" in err


def test_malformed_family_and_empty_reduction(files):
    assert call(["setcheck", files["write"]("foreign.txt", "a b\nz\n")])[0] == 65
    assert call(["setcheck", files["empty"]])[0] == 65
    assert call(["reduce", "kcolor", "--k", "3", files["empty"]])[0] == 65
    assert call(["decide", "--property", f"subgraph:{files['empty']}", files["tri"], files["tri"]])[0] == 65


def test_output_is_deterministic(files):
    argv = ["witness", "--property", "planar", files["c5"], files["path"]]
    assert call(argv) == call(argv)


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "strongeq", "decide", "--property", "ham",
                           files["tri"], files["path"]], capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == "NOT-EQUIVALENT\n"
