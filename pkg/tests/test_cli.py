import json

import pytest

from hopfcheck import catalog
from hopfcheck.cli import main
from hopfcheck.graphs import SimpleGraph, graph_semigroup


@pytest.fixture
def files(tmp_path):
    (tmp_path / "t.rs").write_text(catalog.ONE_RELATOR_SYSTEM)
    (tmp_path / "ex.rs").write_text(catalog.MONOGENIC_EXTENSION)
    (tmp_path / "bad.rs").write_text("letters: a b\n\nrule: a b a b^2 a b -> q\n")
    sg = graph_semigroup(SimpleGraph("ab", [("a", "b")]))
    (tmp_path / "sgamma.json").write_text(json.dumps(sg.to_json()))
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_reduce(files, capsys):
    code, out, _ = run(capsys, "reduce", "--system", files / "t.rs", "--word", "abab^3")
    assert code == 0 and out.strip() == "bab^2ab"


def test_reduce_trace(files, capsys):
    _, out, _ = run(capsys, "reduce", "--system", files / "t.rs", "--word", "abab^2abab", "--trace")
    assert out.strip() == "abab^2abab -> bab"


def test_cayley_dot(files, capsys):
    code, out, _ = run(capsys, "cayley", "--system", files / "ex.rs", "--radius", "4", "--dot", "-")
    assert code == 0
    assert out.startswith("digraph cayley {")
    assert out.count("->") == 10


def test_indices(files, capsys):
    code, out, _ = run(capsys, "indices", "--table", files / "sgamma.json", "--sub", "e,n,0")
    assert code == 0 and json.loads(out) == {"rees": 3, "green": 3}


def test_parse_error_exit_code(files, capsys):
    code, _, err = run(capsys, "reduce", "--system", files / "bad.rs", "--word", "a")
    assert code == 2
    assert "bad.rs:3:" in err and "'q'" in err


def test_bad_word_flag(files, capsys):
    code, _, err = run(capsys, "reduce", "--system", files / "t.rs", "--word", "abz")
    assert code == 2 and "--word" in err


def test_complete_with_order(capsys):
    code, out, _ = run(capsys, "complete", "--system", "builtin:one-relator-relation", "--order", "b a")
    assert code == 0
    assert out.splitlines() == ["rule: abab^2ab -> b", "rule: abab^3 -> bab^2ab"]


def test_confluence(files, capsys):
    code, out, _ = run(capsys, "confluence", "--system", files / "t.rs", "--json")
    assert code == 0 and json.loads(out)["confluent"] is True


def test_morph_check(files, capsys):
    code, out, _ = run(capsys, "morph", "check", "--system", files / "t.rs", "--map", "a->a, b->bab")
    data = json.loads(out)
    assert code == 0
    assert data["injectivity"]["status"] == "Collision"
    assert data["surjectivity"]["status"] == "GeneratorsCovered"


def test_morph_cohopf_not_found(files, capsys):
    _, out, _ = run(capsys, "morph", "cohopf-witness", "--system", files / "ex.rs", "--image-len", "3")
    assert json.loads(out)["status"] == "NotFound"


def test_graph_window_and_check(capsys):
    code, out, _ = run(capsys, "graph", "window", "builtin:tree", "--lo", "0", "--hi", "0")
    assert code == 0 and json.loads(out) == {"vertices": ["x_0", "y_0"], "edges": [["x_0", "y_0"]]}
    refl = json.dumps({"maps": {"x": "x -i", "y": "y -i", "z": "z -i"}})
    code, out, _ = run(capsys, "graph", "check", "builtin:tree-minus-y0", "--map", refl)
    assert code == 1 and "outside the domain" in out
    code, out, _ = run(capsys, "graph", "degree", "builtin:tree-minus-y0", "--vertex", "y_1")
    assert out.strip() == "2"


def test_examples_subset(tmp_path, capsys):
    code, out, _ = run(capsys, "examples", "--only", "tree", "--out", tmp_path)
    assert code == 0
    assert out.count("PASS") == 4
    assert (tmp_path / "tree_window.dot").exists()


def test_examples_unknown_id(capsys):
    code, _, err = run(capsys, "examples", "--only", "nope")
    assert code == 2 and "nope" in err


def test_output_is_deterministic(capsys):
    first = run(capsys, "examples", "--only", "one-relator", "--json")[1]
    second = run(capsys, "examples", "--only", "one-relator", "--json")[1]
    assert first == second
    assert "seconds" not in first


def test_stabilizer(tmp_path, capsys):
    from hopfcheck.finsemi import left_zero
    path = tmp_path / "lz.json"
    path.write_text(json.dumps(left_zero(["1", "2", "3", "4"]).to_json()))
    code, out, _ = run(capsys, "stabilizer", "--table", path, "--sub", "1,2", "--map",
                       "1->2, 2->3, 3->4, 4->1", "--json")
    assert code == 0 and json.loads(out)["power"] == 4
