import pytest
from hypothesis import given, settings, strategies as st

from hopfcheck import catalog
from hopfcheck.core import Alphabet, all_codes
from hopfcheck.rewriting import (
    FuelExhausted, OrientationError, RewritingSystem, complete, normal_form_code,
)

BA = Alphabet.from_string("b a")
AB = Alphabet.from_string("a b")
T_RULES = [("abab^2ab", "b"), ("abab^3", "bab^2ab")]


def system(alpha, rules):
    return RewritingSystem(alpha, [(alpha.word(l), alpha.word(r)) for l, r in rules])


def test_two_rule_system_is_confluent():
    rs = system(BA, T_RULES)
    ok, bad = rs.is_confluent()
    assert ok and not bad
    kinds = sorted(cp.kind for cp in rs.critical_pairs())
    assert kinds == ["overlap", "overlap"]


def test_printed_rule_is_rejected_under_a_before_b():
    with pytest.raises(OrientationError):
        system(AB, T_RULES)


def test_reduction_of_the_derivation():
    rs = system(BA, T_RULES)
    assert str(rs.normal_form(BA.word("abab^3"))) == "bab^2ab"
    assert str(rs.reduce_once(BA.word("abab^2abab"))) == "bab"
    assert rs.reduce_once(BA.word("ab^2a^2b^2")) is None


def test_completion_under_b_before_a():
    rs = RewritingSystem.from_relations(BA, [(BA.word("abab^2ab"), BA.word("b"))])
    assert complete(rs).rule_set() == set(T_RULES)


def test_completion_under_a_before_b():
    rs = RewritingSystem.from_relations(AB, [(AB.word("abab^2ab"), AB.word("b"))])
    done = complete(rs)
    assert done.rule_set() == {("bab^2ab", "abab^3"), ("a^2bab^3", "b"), ("bababab^3", "abab^4ab")}
    assert done.is_confluent()[0]


def test_both_orders_give_the_same_congruence():
    """Normal forms correspond one to one and agree on which words are equal."""
    tb = catalog.one_relator("b a")
    ta = catalog.one_relator("a b")
    swap = str.maketrans("\x00\x01", "\x01\x00")
    for length in range(1, 11):
        nb = sum(1 for c in all_codes(2, length, length) if tb.engine.is_irreducible(c))
        na = sum(1 for c in all_codes(2, length, length) if ta.engine.is_irreducible(c))
        assert nb == na
    classes_b, classes_a = {}, {}
    for code in all_codes(2, 9):
        classes_b.setdefault(tb.engine.nf(code), set()).add(code)
        classes_a.setdefault(ta.engine.nf(code.translate(swap)), set()).add(code)
    assert sorted(map(sorted, classes_b.values())) == sorted(map(sorted, classes_a.values()))


def test_containment_pairs_are_found():
    rs = system(AB, [("ab", "a"), ("bab", "b")])
    kinds = {cp.kind for cp in rs.critical_pairs()}
    assert "containment" in kinds


def test_fuel_exhaustion_carries_partial_system():
    rs = RewritingSystem.from_relations(AB, [(AB.word("aba"), AB.word("bab"))])
    with pytest.raises(FuelExhausted) as err:
        complete(rs, fuel=4)
    assert err.value.partial is not None and len(err.value.partial) >= 4


def test_relations_with_identical_sides_rejected():
    with pytest.raises(OrientationError):
        RewritingSystem.from_relations(AB, [(AB.word("ab"), AB.word("ab"))])


def test_duplicate_rules_rejected():
    with pytest.raises(ValueError):
        system(AB, [("ba", "a"), ("ba", "a")])


def test_completion_is_idempotent():
    s = catalog.extended()
    again = complete(s.engine)
    assert again.rule_set() == s.engine.rule_set()


words = st.text(alphabet="\x00\x01", min_size=1, max_size=14)


@settings(max_examples=200, deadline=None)
@given(words)
def test_strategy_independence(code):
    rules = system(BA, T_RULES).codes
    assert normal_form_code(code, rules) == normal_form_code(code, rules, rightmost=True)


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_normal_forms_are_irreducible_and_congruent(u, v):
    rs = system(BA, T_RULES)
    nu = rs.nf(u)
    assert rs.is_irreducible(nu)
    assert rs.nf(nu + v) == rs.nf(u + v) == rs.nf(u + rs.nf(v))
