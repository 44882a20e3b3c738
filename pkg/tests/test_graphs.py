import itertools
import random

import pytest

from hopfcheck.finsemi import green_index, rees_index
from hopfcheck.graphs import (
    EXTRA, FailureWitness, GraphError, RestrictionError, SimpleGraph, all_labeled_graphs,
    canonical_form, graph_semigroup, hat_extension, injective_graph_endos, injective_semigroup_endos,
    isomorphism_classes, null_subsemigroups, random_graph, rees_index_of_induced, restrict_to_graph,
)

PATH = SimpleGraph("abc", [("a", "b"), ("b", "c")])


def test_single_edge_table():
    s = graph_semigroup(SimpleGraph("ab", [("a", "b")]))
    assert s.elements == ("a", "b", "e", "n", "0")
    mul = lambda x, y: s.elements[s.table[s.index(x)][s.index(y)]]
    assert mul("a", "b") == "e" and mul("a", "a") == "n" and mul("e", "a") == "0"


def test_reserved_names():
    with pytest.raises(GraphError):
        graph_semigroup(SimpleGraph(["e", "x"]))


def test_bad_graphs():
    with pytest.raises(GraphError):
        SimpleGraph("ab", [("a", "a")])
    with pytest.raises(GraphError):
        SimpleGraph("ab", [("a", "c")])


def test_path_endomorphisms():
    endos = injective_graph_endos(PATH)
    assert sorted(e.as_dict()["a"] for e in endos) == ["a", "c"]
    assert all(e.automorphism for e in endos)


def test_cycle_has_dihedral_symmetry():
    c4 = SimpleGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    assert len(injective_graph_endos(c4)) == 8


def test_hat_extension_of_reflection():
    m = hat_extension(PATH, {"a": "c", "b": "b", "c": "a"})
    assert not isinstance(m, FailureWitness)
    assert restrict_to_graph(PATH, m) == {"a": "c", "b": "b", "c": "a"}


def test_hat_extension_requires_an_edge_preserving_map():
    g = SimpleGraph("abc", [("a", "b")])
    with pytest.raises(GraphError):
        hat_extension(g, {"a": "a", "b": "c", "c": "b"})
    with pytest.raises(GraphError):
        hat_extension(g, {"a": "a", "b": "a", "c": "c"})


def test_restriction_rejects_non_injective():
    s = graph_semigroup(PATH)
    collapse = {x: "0" for x in s.elements}
    with pytest.raises(RestrictionError) as err:
        restrict_to_graph(PATH, collapse)
    assert err.value.step in ("endomorphism", "injective")


def test_unique_null_subsemigroup():
    s = graph_semigroup(PATH)
    assert null_subsemigroups(s) == [frozenset(s.index(x) for x in EXTRA)]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_semigroup_structure_on_all_small_graphs(n):
    for g in all_labeled_graphs(n):
        s = graph_semigroup(g)
        assert len(s) == n + 3
        zero = s.index("0")
        assert all(s.table[s.table[x][y]][z] == zero
                   for x, y, z in itertools.product(range(len(s)), repeat=3))


def test_rees_index_of_induced_subgraphs():
    rng = random.Random(3)
    for _ in range(100):
        g = random_graph(rng, 6)
        keep = [v for v in g.vertices if rng.random() < 0.6]
        assert rees_index_of_induced(g, keep) == len(g.vertices) - len(keep) + 1


def test_indices_of_extra_elements():
    g = SimpleGraph("ab", [("a", "b")])
    s = graph_semigroup(g)
    t = s.subsemigroup(list(EXTRA))
    assert (rees_index(t), green_index(t)) == (3, 3)


def test_census_counts():
    assert sum(len(all_labeled_graphs(n)) for n in range(1, 5)) == 75
    assert [len(isomorphism_classes(all_labeled_graphs(n))) for n in range(1, 6)] == [1, 2, 4, 11, 34]


def test_canonical_form_ignores_labels():
    a = SimpleGraph("xyz", [("x", "y")])
    b = SimpleGraph("xyz", [("y", "z")])
    assert canonical_form(a) == canonical_form(b)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_round_trip_on_all_small_graphs(n):
    for g in all_labeled_graphs(n):
        graph_side = sorted(tuple(sorted(e.as_dict().items())) for e in injective_graph_endos(g))
        semi = injective_semigroup_endos(g)
        restricted = sorted(tuple(sorted(restrict_to_graph(g, psi).items())) for psi in semi)
        assert graph_side == restricted
        for psi in semi:
            back = hat_extension(g, restrict_to_graph(g, psi))
            assert dict(back.images) == psi
