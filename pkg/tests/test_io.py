import json

import pytest

from hopfcheck.io import (
    InputError, load, parse_graph, parse_presentation, parse_schematic, parse_table, sniff_format,
)

T_TEXT = """\
# the one-relator semigroup
letters: b a
rule: a b a b^2 a b -> b
rule: abab^3 -> bab^2ab
"""


def test_presentation_round_trip():
    pres = parse_presentation(T_TEXT, "t.rs")
    s = pres.semigroup()
    assert len(s.engine) == 2
    assert str(s.element("abab^3")) == "bab^2ab"


def test_relations_are_oriented():
    pres = parse_presentation("letters: x y\nrelation: x^2 = y^2\n")
    assert pres.system().rule_set() == {("y^2", "x^2")}


@pytest.mark.parametrize("text, line, column", [
    ("letters: a b\nrule: ab^ -> b\n", 2, 9),
    ("letters: a b\nrule: ab -> c\n", 2, 13),
    ("letters: a b\nrule: ab = b\n", 2, 6),
    ("rule: a -> b\n", 1, 1),
    ("letters: a b\nbogus: a\n", 2, 1),
    ("letters: a b\n\n# note\nrelation: a = (b\n", 4, 15),
])
def test_parse_errors_name_line_and_column(text, line, column):
    with pytest.raises(InputError) as err:
        parse_presentation(text, "bad.rs").system()
    assert (err.value.line, err.value.column) == (line, column)
    assert str(err.value).startswith(f"bad.rs:{line}:{column}:")


def test_misoriented_rule_names_its_line():
    with pytest.raises(InputError) as err:
        parse_presentation(T_TEXT.replace("letters: b a", "letters: a b"), "t.rs").system()
    assert err.value.line == 4
    assert err.value.token == "abab^3"


def test_reorder():
    pres = parse_presentation("letters: a b\nrelation: abab^2ab = b\n").reorder("b a")
    assert pres.alphabet.letters == ("b", "a")
    assert len(pres.semigroup().engine) == 2
    with pytest.raises(InputError):
        pres.reorder("a c")


def test_table_json(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"elements": ["a", "b"], "table": [["a", "a"], ["a", "b"]]}))
    assert sniff_format(path) == "table"
    s = load(path)
    assert s.elements == ("a", "b")


def test_table_json_errors():
    with pytest.raises(InputError) as err:
        parse_table('{"elements": ["a"],\n "table": [[0, ]]}', "x.json")
    assert err.value.line == 2
    with pytest.raises(InputError) as err:
        parse_table('{"elements": ["a", "b"],\n "table": [[1, 0], [0, 0]]}', "x.json")
    assert "table" in str(err.value)


def test_graph_and_schematic_sniffing(tmp_path):
    g = tmp_path / "g.json"
    g.write_text('{"vertices": ["a", "b"], "edges": [["a", "b"]]}')
    assert sniff_format(g) == "graph"
    assert len(load(g).edges) == 1
    sch = tmp_path / "tree.json"
    sch.write_text(json.dumps({"families": [{"name": "x", "domain": "Z"}], "rules": [["x i", "x i+1"]]}))
    assert sniff_format(sch) == "schematic"
    assert load(sch).degree(("x", 7)) == 2


def test_graph_errors():
    with pytest.raises(InputError):
        parse_graph('{"vertices": ["a"], "edges": [["a", "b"]]}', "g.json")
    with pytest.raises(InputError):
        parse_schematic('{"families": [{"name": "x", "domain": "R"}], "rules": []}', "s.json")


def test_missing_file():
    with pytest.raises(InputError):
        load("/nonexistent/file.rs")
