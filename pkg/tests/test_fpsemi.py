import pytest

from hopfcheck import catalog
from hopfcheck.fpsemi import (
    FpSemigroup, ParentMismatch, cayley_graph, enumerate_ball, indecomposables, solve_square_root,
)

from _support import brute_force_irreducible


@pytest.fixture(scope="module")
def t():
    return catalog.one_relator()


@pytest.fixture(scope="module")
def s():
    return catalog.extended()


@pytest.fixture(scope="module")
def m():
    return catalog.monogenic_extension()


def test_multiplication_matches_the_relation(t):
    assert str(t.element("abab^2a") * t.element("b")) == "b"
    assert t.equal("a(bab)^2", "abab^2ab")
    assert not t.equal("ab^2a^2b^2", "b")


def test_ball_matches_brute_force_filter(t, s):
    for sg in (t, s):
        got = [e.word.code for e in enumerate_ball(sg, 7)]
        assert got == brute_force_irreducible(sg, 7)


def test_extension_ball_census(s, t):
    ball = [str(e) for e in enumerate_ball(s, 8)]
    assert [w for w in ball if "f" in w] == ["f"]
    assert len(ball) == len(enumerate_ball(t, 8)) + 1 == 489


def test_extension_indecomposables(s):
    rep = indecomposables(s, 1, 8)
    assert sorted(str(e) for e in rep.elements) == ["a", "f"]
    u, v = rep.witnesses[s.element("b")]
    assert u * v == s.element("b")
    assert s.element("ab") * s.element("ab^2ab") == s.element("b")


def test_monogenic_extension_ball(m):
    assert [str(e) for e in enumerate_ball(m, 6)] == ["x", "y", "x^2", "x^3", "x^4", "x^5", "x^6"]


def test_square_roots(m):
    assert sorted(str(u) for u in solve_square_root(m, "x^2", 6)) == ["x", "y"]
    for k in range(2, 6):
        assert [str(u) for u in solve_square_root(m, f"x^{2 * k}", 2 * k)] == [f"x^{k}"]
    assert solve_square_root(m, "x^3", 6) == []


def test_cayley_dot(m):
    dot = cayley_graph(m, 4).to_dot()
    assert dot.count("->") == 10
    assert dot.count("style=dashed") == 3  # one ghost node and two edges
    assert 'n4 -> d0 [label="x", style=dashed]' in dot
    assert 'n1 -> n2 [label="y"]' in dot


def test_free_semigroup_has_no_rules():
    free = FpSemigroup.from_strings("x")
    assert free.is_free()
    assert len(enumerate_ball(free, 5)) == 5


def test_mixing_parents_fails(t, s):
    with pytest.raises(ParentMismatch):
        t.element("a") * s.element("a")


def test_non_normal_element_rejected(t):
    from hopfcheck.fpsemi import Element
    with pytest.raises(ValueError):
        Element(t.word("abab^3"), t)
