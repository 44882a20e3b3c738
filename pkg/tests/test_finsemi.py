import pytest
from hypothesis import given, settings, strategies as st

from hopfcheck import catalog
from hopfcheck.finsemi import (
    FiniteSemigroup, NotAssociative, NotClosed, classical_green, clifford_of_two_groups,
    compose_power, cyclic_group, green_index, left_zero, null_semigroup, power_stabilizer,
    rees_index, relative_green, stabilizing_exponents,
)
from hopfcheck.graphs import SimpleGraph, graph_semigroup

from _support import is_subsemigroup, random_triples, small_semigroups


def test_rejects_non_associative_table():
    with pytest.raises(NotAssociative):
        FiniteSemigroup("ab", [[1, 0], [0, 0]])


def test_rejects_non_closed_subset():
    with pytest.raises(NotClosed):
        cyclic_group(4).subsemigroup(["1"])


def test_names_in_table_cells():
    s = FiniteSemigroup(["p", "q"], [["p", "p"], ["p", "q"]])
    assert s.table == ((0, 0), (0, 1))


def test_edge_graph_indices():
    s = graph_semigroup(SimpleGraph("ab", [("a", "b")]))
    t = s.subsemigroup(["e", "n", "0"])
    assert rees_index(t) == 3
    assert green_index(t) == 3
    h = relative_green(t, "H")
    assert h.class_of(s.index("a")) == {s.index("a")}


def test_graph_vertex_right_ideal():
    # v T^1 for T = {e, n, 0}: v itself plus the products v e, v n, v 0, all equal to 0
    s = graph_semigroup(SimpleGraph("ab", [("a", "b")]))
    t = s.subsemigroup(["e", "n", "0"])
    v = s.index("a")
    ideal = {v} | {s.table[v][u] for u in t.members}
    assert s.names(ideal) == ["a", "0"]


def test_clifford_green_index():
    s = catalog.clifford_c4_c2()
    assert len(s) == 6
    top = s.subsemigroup(range(4))
    assert green_index(top) == 2
    r = relative_green(top, "R")
    assert r.class_of(4) == {4, 5}
    trivial = catalog.clifford_c4_c2(trivial=True)
    assert green_index(trivial.subsemigroup(range(4))) == 3


def test_clifford_needs_a_homomorphism():
    with pytest.raises(ValueError):
        clifford_of_two_groups(cyclic_group(4), cyclic_group(2), [0, 1, 1, 1])


def test_clifford_primes_clashing_names():
    s = clifford_of_two_groups(cyclic_group(2), cyclic_group(2), [0, 0])
    assert s.elements == ("0", "1", "0'", "1'")


def test_left_zero_stabilizer():
    s, t, phi = catalog.left_zero_cycle()
    cert = power_stabilizer(s, t, phi)
    assert cert.per_generator == {"1": (1, 4), "2": (1, 4)}
    assert cert.power == 4
    assert cert.first_power_image == ["2", "3"]
    assert cert.stabilized_image == ["1", "2"]
    assert cert.image_in_t and cert.bijective_on_t and cert.bijective_on_complement


def test_negation_on_cyclic_six():
    s = cyclic_group(6)
    t = s.subsemigroup(["0", "2", "4"])
    cert = power_stabilizer(s, t, [(-x) % 6 for x in range(6)])
    assert cert.power == 1


def test_stabilizing_exponents_with_tail():
    # 0 -> 1 -> 2 -> 3 -> 2 ; T = {0, 2}
    assert stabilizing_exponents([1, 2, 3, 2], 0, frozenset({0, 2})) == (1, 2)
    # T = {3}: the orbit alternates 2, 3 at every even or odd step, never settling
    with pytest.raises(ValueError):
        stabilizing_exponents([1, 2, 3, 2], 0, frozenset({3}))


def _settles(phi, t, members, k, m, horizon=60):
    x, powers = t, [t]
    for _ in range(horizon * m):
        x = phi[x]
        powers.append(x)
    return all(powers[l * m] in members for l in range(k, horizon))


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=6, max_size=6), st.integers(0, 5),
       st.sets(st.integers(0, 5), min_size=1))
def test_stabilizing_exponents_against_brute_force(phi, t, members):
    members = frozenset(members)
    feasible = [(k, m) for m in range(1, 13) for k in range(1, 13) if _settles(phi, t, members, k, m)]
    if not feasible:
        with pytest.raises(ValueError):
            stabilizing_exponents(phi, t, members)
        return
    k, m = stabilizing_exponents(phi, t, members)
    best_m = min(m2 for _, m2 in feasible)
    assert m == best_m
    assert k == min(k2 for k2, m2 in feasible if m2 == best_m)


def test_stabilizer_rejects_non_injective():
    s = null_semigroup("abz")
    with pytest.raises(ValueError):
        power_stabilizer(s, s.subsemigroup(["z"]), [2, 2, 2])


@pytest.mark.parametrize("s", small_semigroups(4)[:40], ids=lambda s: f"n{len(s)}")
def test_relative_green_with_t_equal_s_is_classical(s):
    whole = s.whole()
    for kind in "RLH":
        assert sorted(map(sorted, relative_green(whole, kind).classes)) == \
            sorted(map(sorted, classical_green(s, kind)))


def test_random_triples_never_straddle():
    for s, t, phi in random_triples(50):
        assert is_subsemigroup(t)
        for kind in "RLH":
            for c in relative_green(t, kind).classes:
                assert c <= t.members or not (c & t.members)
        cert = power_stabilizer(s, t, phi)
        powered = compose_power(phi, cert.power)
        assert {powered[x] for x in t.members} <= t.members
        comp = t.complement()
        assert {powered[x] for x in comp} == comp


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6))
def test_monogenic_is_associative(index, period):
    from hopfcheck.finsemi import monogenic
    s = monogenic(index, period)
    assert len(s) == index + period - 1
    assert s.associativity_failure() is None


def test_left_zero_subsemigroups_are_all_subsets():
    assert len(left_zero("abc").subsemigroups()) == 7
