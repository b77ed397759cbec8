import json
import subprocess
import sys

import pytest

from raagflags.cli import main


@pytest.fixture
def gfile(tmp_path):
    def make(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_p3(capsys, gfile):
    code, out, _ = run(capsys, "analyze", gfile("a b\nb c\n"))
    assert code == 0
    assert "E1{b}={b} level 1: FreeAbelianLevelOne" in out
    assert "E2{a,c}={a,b,c} level 2: WithCenter{Ab={b}, B={}}" in out
    assert "{a,c} < {b}" in out


def test_analyze_disconnected(capsys, caplog, gfile):
    code, out, _ = run(capsys, "analyze", gfile("a b\nc d\n"))
    assert code == 0
    assert "component 0: {a,b}" in out and "component 1: {c,d}" in out
    assert "disconnected" in caplog.text


def test_empty_file(capsys, gfile):
    code, _, err = run(capsys, "analyze", gfile("# nothing\n"))
    assert code == 2 and "no vertices" in err


def test_parse_error_and_missing_file(capsys, gfile, tmp_path):
    code, _, err = run(capsys, "gens", gfile("a b c\n"))
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, "gens", str(tmp_path / "missing.txt"))
    assert code == 2


def test_bad_config(capsys, gfile):
    code, _, err = run(capsys, "factor", gfile("a b\nb c\n"), "--radius", "-1")
    assert code == 2
    code, _, err = run(capsys, "factor", gfile("a b\nb c\n"), "--depth", "0")
    assert code == 2


def test_nf(capsys, gfile):
    code, out, _ = run(capsys, "nf", gfile("a b\nb c\n"), "a b a^-1")
    assert (code, out) == (0, "b\n")
    code, out, _ = run(capsys, "nf", gfile("a b\nb c\n"), "a c a^-1 c^-1", "--format", "structured")
    assert json.loads(out)["normal_form"] == "a c a^-1 c^-1"
    code, _, err = run(capsys, "nf", gfile("a b\nb c\n"), "q")
    assert code == 2


def test_gens(capsys, gfile):
    code, out, _ = run(capsys, "gens", gfile("a b\nb c\n"), "--format", "structured")
    doc = json.loads(out)
    (comp,) = doc["components"]
    assert len(comp["laurence"]) == 13 and len(comp["aut1"]) == 10
    assert "CenterTransvection[E2{a,c}](a->ab)" in comp["aut1"]


def test_factor_p3(capsys, gfile):
    code, out, _ = run(capsys, "factor", gfile("a b\nb c\n"))
    assert code == 0
    assert "12/12 routed generators verified, 0 failures" in out
    assert "res  Symmetry(a->c,c->a)" in out
    assert "ok   Transvection(a,b) = CenterTransvection[E2{a,c}](a->ab)" in out


def test_factor_structured(capsys, gfile):
    code, out, _ = run(capsys, "factor", gfile("a b\nb c\nc d\nd e\n"), "--format", "structured")
    doc = json.loads(out)
    assert doc["schema_version"] == 1 and doc["failures"] == 0
    rows = doc["components"][0]["routing"]
    assert all(r["passed"] for r in rows)


def test_verify15(capsys, gfile):
    code, out, _ = run(capsys, "verify15", gfile("a b\nb c\nc d\n"))
    assert code == 0
    assert "0 failures" in out


def test_decompose(capsys, gfile):
    code, out, _ = run(capsys, "decompose", gfile("a b\nb c\nc d\n"))
    assert code == 0
    assert "E2{a}={a,b,c}: groups [InducedSubgraphGroup{c,d}] loops s=1 t=0 kernel <<b>>" in out
    code, out, _ = run(capsys, "decompose", gfile("a b\nb c\nc a\n"))
    assert "line actions via a, b, c" in out


def test_dot_outputs(capsys, gfile):
    code, out, _ = run(capsys, "analyze", gfile("a b\nb c\n"), "--format", "dot")
    assert out.startswith("digraph flags")
    code, out, _ = run(capsys, "decompose", gfile("a b\nb c\n"), "--format", "dot")
    assert out.count("graph ") == 2


def test_out_file_and_stdin(capsys, gfile, tmp_path, monkeypatch):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "analyze", gfile("a b\nb c\n"), "--format", "structured", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["command"] == "analyze"
    monkeypatch.setattr(sys, "stdin", __import__("io").StringIO("a b\nb c\n"))
    code, out, _ = run(capsys, "nf", "-", "c b c^-1")
    assert out == "b\n"


def test_json_graph_input(capsys, gfile):
    path = gfile(json.dumps({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]}), "g.json")
    code, out, _ = run(capsys, "nf", path, "a b a^-1")
    assert out == "b\n"


def test_corpus_small_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "corpus", "--max-n", "4", "--samples", "50", "--format", "structured", "--out", str(a))[0] == 0
    assert run(capsys, "corpus", "--max-n", "4", "--samples", "50", "--format", "structured", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    summary = json.loads(a.read_text())["summary"]
    assert summary["graphs"] == 8 and summary["failures"] == 0


def test_module_entry_point(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("a b\nb c\n")
    res = subprocess.run([sys.executable, "-m", "raagflags", "nf", str(p), "a b a^-1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "b\n"


def test_exit_codes_for_failures(capsys, gfile, monkeypatch):
    from raagflags import cli
    from raagflags.flags import InvariantViolation

    def boom(g):
        raise InvariantViolation("forced")

    monkeypatch.setattr(cli, "build_flags_hypergraph", boom)
    code, _, err = run(capsys, "analyze", gfile("a b\nb c\n"))
    assert code == 3 and "forced" in err
    monkeypatch.setattr(cli, "routing_report", lambda *a: [
        {"generator": "X", "result": "search-failed", "diagnostic": "forced", "passed": False}])
    code, out, _ = run(capsys, "factor", gfile("a b\nb c\n"))
    assert code == 1 and "FAIL X: forced" in out
