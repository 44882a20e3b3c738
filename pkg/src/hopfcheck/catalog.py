"""Ready-made example objects used by the claims manifest, the CLI and the tests.

Letter orders are chosen so that the rules as usually written are
shortlex-decreasing: ``b < a`` for the one-relator semigroup and its
extension by ``f``, ``x < y`` for the two-generator nilpotent-like
extension of the free monogenic semigroup.
"""

from __future__ import annotations

from .finsemi import FiniteSemigroup, SubSemigroup, clifford_of_two_groups, cyclic_group, left_zero
from .fpsemi import FpSemigroup
from .io import parse_presentation
from .schematic import FamilyMap, SchematicGraph

# the one-relator semigroup <a, b | abab^2ab = b>, as a complete system
ONE_RELATOR_SYSTEM = """\
letters: b a
rule: abab^2ab -> b
rule: abab^3 -> bab^2ab
"""

ONE_RELATOR_RELATION = """\
letters: a b
relation: abab^2ab = b
"""

# the extension by one extra generator f
EXTENDED = """\
letters: b a f
relation: abab^2ab = b
relation: fa = ba
relation: af = ab
relation: fb = b^2
relation: bf = b^2
relation: f^2 = b^2
"""

# free monogenic semigroup plus one extra generator y
MONOGENIC_EXTENSION = """\
letters: x y
rule: y^2 -> x^2
rule: xy -> x^2
rule: yx -> x^2
"""

FREE_MONOGENIC = """\
letters: x
"""

TREE_GRAPH = {
    "families": [
        {"name": "x", "domain": "Z"},
        {"name": "y", "domain": "Z"},
        {"name": "z", "domain": "N>=1"},
    ],
    "rules": [["x i", "y i"], ["y j", "z j", "j>=1"], ["x i", "x i+1"]],
}

TREE_SUBGRAPH = {
    "families": [
        {"name": "x", "domain": "Z"},
        {"name": "y", "domain": "Z", "exclude": [0]},
        {"name": "z", "domain": "N>=1"},
    ],
    "rules": TREE_GRAPH["rules"],
}

PRESENTATIONS = {
    "one-relator": ONE_RELATOR_SYSTEM,
    "one-relator-relation": ONE_RELATOR_RELATION,
    "extended": EXTENDED,
    "monogenic-extension": MONOGENIC_EXTENSION,
    "free-monogenic": FREE_MONOGENIC,
}


def presentation(name: str, order: str | None = None):
    return parse_presentation(PRESENTATIONS[name], f"<{name}>").reorder(order)


def one_relator(order: str | None = None) -> FpSemigroup:
    """``<a, b | abab^2ab = b>`` (default letter order b < a)."""
    if order is None:
        return presentation("one-relator").semigroup()
    return parse_presentation(ONE_RELATOR_RELATION).reorder(order).semigroup()


def extended(order: str | None = None, fuel: int = 50) -> FpSemigroup:
    return presentation("extended", order).semigroup(fuel)


def monogenic_extension() -> FpSemigroup:
    return presentation("monogenic-extension").semigroup()


def free_monogenic() -> FpSemigroup:
    return presentation("free-monogenic").semigroup()


def tree_graph(z_start: int = 1) -> SchematicGraph:
    return SchematicGraph.from_json(_with_z_start(TREE_GRAPH, z_start))


def tree_subgraph(z_start: int = 1) -> SchematicGraph:
    return SchematicGraph.from_json(_with_z_start(TREE_SUBGRAPH, z_start))


def _with_z_start(data: dict, z_start: int) -> dict:
    fams = [dict(f, domain=f"N>={z_start}") if f["name"] == "z" else f for f in data["families"]]
    rules = [[*r[:2], f"j>={z_start}"] if len(r) == 3 else r for r in data["rules"]]
    return {"families": fams, "rules": rules}


def tree_shift(by: int = 1) -> FamilyMap:
    return FamilyMap.shift("xyz", by)


def tree_reflection() -> FamilyMap:
    return FamilyMap.reflection("xyz")


def clifford_c4_c2(trivial: bool = False) -> FiniteSemigroup:
    """Strong semilattice C4 > C2 glued by reduction mod 2 (or the trivial map)."""
    hom = [0, 0, 0, 0] if trivial else [0, 1, 0, 1]
    return clifford_of_two_groups(cyclic_group(4, "g"), cyclic_group(2, "h"), hom)


def left_zero_cycle() -> tuple[FiniteSemigroup, SubSemigroup, dict[str, str]]:
    """Left-zero semigroup on 1..4, T = {1, 2}, phi the 4-cycle 1->2->3->4->1."""
    s = left_zero(["1", "2", "3", "4"])
    t = s.subsemigroup(["1", "2"])
    return s, t, {"1": "2", "2": "3", "3": "4", "4": "1"}
