"""A manifest of checkable statements about the built-in examples.

Each claim is a function returning a :class:`ClaimResult`; the runner
collects them into a :class:`RunReport`.  Status ``bounded`` means the
check passed but only up to the stated search radius.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable

from . import catalog
from .finsemi import SubSemigroup, green_index, power_stabilizer, rees_index, relative_green
from .fpsemi import cayley_graph, enumerate_ball, indecomposables, solve_square_root
from .graphs import (
    FailureWitness, SimpleGraph, all_labeled_graphs, graph_semigroup, hat_extension, injective_graph_endos,
    injective_semigroup_endos, random_graph, rees_index_of_induced, restrict_to_graph,
)
from .morph import (
    Collision, ExactInjective, ExactNonSurjective, GeneratorMap, GeneratorsCovered, NotFound,
    certify, check_endomorphism, find_endomorphisms, non_cohopf_witness, non_hopf_witness,
    verify_collision,
)
from .schematic import SchematicMapError, schematic_check_endo


@dataclass
class ClaimResult:
    status: str            # "pass", "fail" or "bounded"
    detail: str
    artifacts: list[str] = field(default_factory=list)


@dataclass
class ClaimRecord:
    id: str
    anchor: str
    status: str
    detail: str
    seconds: float
    artifacts: list[str]


@dataclass
class RunReport:
    records: list[ClaimRecord]

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.records)

    def to_json(self, timings: bool = False) -> dict:
        """Timings are left out unless asked for, so output is reproducible."""
        claims = [asdict(r) for r in self.records]
        if not timings:
            for c in claims:
                del c["seconds"]
        return {"ok": self.ok, "claims": claims}

    def lines(self) -> list[str]:
        return [f"{r.status.upper():8} {r.id:34} {r.detail}" for r in self.records]


@dataclass
class Claim:
    id: str
    anchor: str
    check: Callable[[Path | None], ClaimResult]


def _ok(cond: bool, detail: str, bounded: bool = False, artifacts=None) -> ClaimResult:
    status = ("bounded" if bounded else "pass") if cond else "fail"
    return ClaimResult(status, detail, artifacts or [])


def _write(outdir: Path | None, name: str, text: str) -> list[str]:
    if outdir is None:
        return []
    outdir.mkdir(parents=True, exist_ok=True)
    path = outdir / name
    path.write_text(text)
    return [str(path)]


# ------------------------------------------------------------ one relator

def one_relator_confluent(_):
    t = catalog.one_relator()
    ok, bad = t.engine.is_confluent()
    n = len(t.engine.critical_pairs())
    return _ok(ok and len(t.engine) == 2, f"{n} critical pairs, {len(bad)} unresolved")


def one_relator_completion(_):
    t = catalog.one_relator("b a")
    want = {("abab^2ab", "b"), ("abab^3", "bab^2ab")}
    got = set(t.engine.rule_set())
    return _ok(got == want, f"completed rules {sorted(got)}")


def one_relator_derivation(_):
    t = catalog.one_relator()
    steps = [t.equal("abab^3", "abab^2(abab^2ab)"),
             t.equal("abab^2(abab^2ab)", "(abab^2ab)ab^2ab"),
             t.equal("abab^3", "bab^2ab")]
    return _ok(all(steps), "abab^3 = abab^2(abab^2ab) = (abab^2ab)ab^2ab = bab^2ab")


def _phi(t):
    return GeneratorMap(t, {"a": "a", "b": "bab"})


def one_relator_phi_endo(_):
    t = catalog.one_relator()
    cert = check_endomorphism(_phi(t))
    image = _phi(t)("abab^2ab")
    return _ok(cert.is_endomorphism and str(image) == "bab",
               f"relation image {image}, {cert.endo_status}")


def one_relator_phi_surjective(_):
    t = catalog.one_relator()
    phi = _phi(t)
    a_ok = str(phi("a")) == "a"
    b_ok = str(phi("ab^2")) == "b" and t.equal("a(bab)^2", "abab^2ab")
    st = certify(phi, 4).surjectivity
    return _ok(a_ok and b_ok and isinstance(st, GeneratorsCovered),
               f"a <- a, b <- ab^2; {st}")


def one_relator_phi_collision(_):
    t = catalog.one_relator()
    phi = _phi(t)
    u, v = t.word("ab^2a^2b^2"), t.word("b")
    irreducible = t.engine.is_irreducible(u) and t.engine.is_irreducible(v)
    col = verify_collision(phi, str(u), str(v))
    return _ok(irreducible and col is not None and col.image == "bab",
               f"{col}; both sides irreducible: {irreducible}")


def one_relator_non_hopf_search(_):
    t = catalog.one_relator()
    cert = non_hopf_witness(t, 3, 7)
    if isinstance(cert, NotFound):
        return _ok(False, str(cert))
    return _ok(dict(cert.map.images) == dict(_phi(t).images) and isinstance(cert.injectivity, Collision),
               f"{cert.map}: {cert.injectivity}")


# ------------------------------------------------------------- extension

def extended_completion(_):
    s = catalog.extended(fuel=50)
    ok, _ = s.engine.is_confluent()
    return _ok(ok, f"{len(s.engine)} rules after completion, confluent")


def extended_census(_):
    s = catalog.extended()
    t = catalog.one_relator()
    ball = [str(e) for e in enumerate_ball(s, 8)]
    with_f = [w for w in ball if "f" in w]
    t_ball = sorted(str(e) for e in enumerate_ball(t, 8))
    rest = sorted(w for w in ball if "f" not in w)
    rees = len(with_f) + 1
    return _ok(with_f == ["f"] and rest == t_ball and rees == 2,
               f"{len(ball)} normal forms up to length 8, only f-form {with_f}, Rees index {rees}",
               bounded=True)


def extended_indecomposables(_):
    s = catalog.extended()
    rep = indecomposables(s, 1, 8)
    names = sorted(str(e) for e in rep.elements)
    b_split = s.element("ab") * s.element("ab^2ab") == s.element("b")
    return _ok(names == ["a", "f"] and b_split, f"{rep}; b = (ab)(ab^2ab): {b_split}",
               bounded=True)


def extended_f_not_b(_):
    s = catalog.extended()
    chain = s.equal("afaf^2af", "abab^2ab") and s.equal("abab^2ab", "b")
    return _ok(chain and not s.equal("f", "b"), "afaf^2af = abab^2ab = b but f != b")


# ------------------------------------------------------ free monogenic etc

def free_monogenic_square(_):
    t = catalog.free_monogenic()
    cert = certify(GeneratorMap(t, {"x": "x^2"}), 6)
    inj = isinstance(cert.injectivity, ExactInjective)
    sur = isinstance(cert.surjectivity, ExactNonSurjective) and cert.surjectivity.uncovered == ("x",)
    return _ok(inj and sur, f"{cert.injectivity}; {cert.surjectivity}")


def monogenic_extension_ball(_):
    s = catalog.monogenic_extension()
    ok, _ = s.engine.is_confluent()
    ball = [str(e) for e in enumerate_ball(s, 6)]
    want = ["x", "y", "x^2", "x^3", "x^4", "x^5", "x^6"]
    return _ok(ok and ball == want, f"confluent: {ok}; ball(6) = {ball}")


def cayley_structure_ok(cg) -> bool:
    adj = cg.adjacency()
    if sorted(adj) != sorted(["x", "y", "x^2", "x^3", "x^4"]):
        return False
    for src in ("x", "y"):
        if sorted(adj[src]) != [("x", "x^2"), ("y", "x^2")]:
            return False
    for k in (2, 3, 4):
        if sorted(adj[f"x^{k}"]) != [("x", f"x^{k + 1}"), ("y", f"x^{k + 1}")]:
            return False
    dangling = [e for e in cg.edges if e.dangling]
    return len(dangling) == 2 and all(str(e.source) == "x^4" for e in dangling)


def monogenic_extension_cayley(outdir):
    s = catalog.monogenic_extension()
    cg = cayley_graph(s, 4)
    arts = _write(outdir, "cayley_monogenic_extension.dot", cg.to_dot())
    return _ok(cayley_structure_ok(cg), "x,y -> x^2 and x^k -> x^(k+1) under both labels; "
               "two dangling edges from x^4", artifacts=arts)


def monogenic_extension_roots(_):
    s = catalog.monogenic_extension()
    got = {2: sorted(str(u) for u in solve_square_root(s, "x^2", 6))}
    for k in (2, 3, 4):
        got[2 * k] = sorted(str(u) for u in solve_square_root(s, f"x^{2 * k}", 2 * k))
    want = {2: ["x", "y"], 4: ["x^2"], 6: ["x^3"], 8: ["x^4"]}
    return _ok(got == want, "; ".join(f"roots(x^{n}) = {v}" for n, v in got.items()))


def monogenic_extension_endos(_):
    s = catalog.monogenic_extension()
    certs = find_endomorphisms(s, 3, 6)
    inj = [c for c in certs if not isinstance(c.injectivity, Collision)]
    names = sorted(str(c.map) for c in inj)
    auto = all(isinstance(c.surjectivity, GeneratorsCovered) and isinstance(c.injectivity, ExactInjective)
               for c in inj)
    nc = non_cohopf_witness(s, 3, 6)
    return _ok(names == ["x->x, y->y", "x->y, y->x"] and auto and isinstance(nc, NotFound),
               f"{len(certs)} endomorphisms with image length <= 3, injective: {names}",
               bounded=True)


# ------------------------------------------------------------ finite graphs

def graph_semigroup_sweep(_):
    rng = random.Random(7)
    graphs = [g for n in range(1, 6) for g in all_labeled_graphs(n)]
    graphs += [random_graph(rng, 6) for _ in range(200)]
    for g in graphs:
        s = graph_semigroup(g)
        zero = s.index("0")
        if len(s) != len(g.vertices) + 3:
            return _ok(False, f"wrong size for {g}")
        if any(s.table[s.table[x][y]][z] != zero for x, y, z in itertools.product(range(len(s)), repeat=3)):
            return _ok(False, f"non-zero triple product in S_G for {g}")
        keep = [v for v in g.vertices if rng.random() < 0.5]
        rees_index_of_induced(g, keep)
    return _ok(True, f"{len(graphs)} graphs: associative, |S_G| = |V|+3, triple products 0, "
                     f"Rees index |V-W|+1")


def graph_roundtrip(_):
    count = 0
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            ge = [e.as_dict() for e in injective_graph_endos(g)]
            se = injective_semigroup_endos(g)
            restricted = [restrict_to_graph(g, psi) for psi in se]
            if sorted(map(sorted, map(dict.items, restricted))) != sorted(map(sorted, map(dict.items, ge))):
                return _ok(False, f"mismatch on {g}")
            for phi in ge:
                hat = hat_extension(g, phi)
                if isinstance(hat, FailureWitness) or restrict_to_graph(g, hat) != phi:
                    return _ok(False, f"hat/restrict round trip fails on {g}")
            count += 1
    return _ok(True, f"{count} labeled graphs on <= 4 vertices: graph and S_G endomorphisms correspond")


def graph_edge_indices(_):
    s = graph_semigroup(SimpleGraph("ab", [("a", "b")]))
    t = s.subsemigroup(["e", "n", "0"])
    r, gi = rees_index(t), green_index(t)
    return _ok((r, gi) == (3, 3), f"rees {r}, green {gi}")


# ---------------------------------------------------------- infinite trees

def tree_shift(_):
    rep = schematic_check_endo(catalog.tree_graph(), catalog.tree_shift())
    return _ok(rep.endomorphism and rep.injective and not rep.surjective
               and rep.unreached == [("z", 1)], f"{'; '.join(rep.notes)}")


def tree_degrees(_):
    d = catalog.tree_subgraph()
    g = catalog.tree_graph()
    table = {"x_0": d.degree(("x", 0)), "y_1": d.degree(("y", 1)), "y_-1": d.degree(("y", -1))}
    others = all(d.degree(("x", i)) == 3 for i in range(-20, 21) if i != 0)
    zs = all(d.degree(("z", j)) == 1 for j in range(1, 21))
    ok = table == {"x_0": 2, "y_1": 2, "y_-1": 1} and others and zs and g.degree(("y", 0)) == 1
    return _ok(ok, f"{table}; x_i (i != 0) -> 3; z_j -> 1")


def tree_reflection(_):
    try:
        schematic_check_endo(catalog.tree_subgraph(), catalog.tree_reflection())
    except SchematicMapError as exc:
        return _ok(True, f"rejected: {exc.failures[0]}")
    return _ok(False, "reflection was accepted")


def tree_windows(outdir):
    g, d = catalog.tree_graph(), catalog.tree_subgraph()
    wg, wd = g.window(-3, 3), d.window(-3, 3)
    xs = [f"x_{i}" for i in range(-3, 4)]
    ys = [f"y_{i}" for i in range(-3, 4)]
    zs = ["z_1", "z_2", "z_3"]
    edges = {frozenset(p) for p in zip(xs, xs[1:])}
    edges |= {frozenset(p) for p in zip(xs, ys)}
    edges |= {frozenset((f"y_{j}", f"z_{j}")) for j in (1, 2, 3)}
    ok_g = set(wg.vertices) == set(xs + ys + zs) and set(wg.edges) == edges
    ok_d = (set(wd.vertices) == set(xs + ys + zs) - {"y_0"}
            and set(wd.edges) == {e for e in edges if "y_0" not in e})
    arts = _write(outdir, "tree_window.dot", wg.to_dot("tree")) + \
        _write(outdir, "tree_subgraph_window.dot", wd.to_dot("subtree"))
    return _ok(ok_g and ok_d, f"windows [-3,3]: {len(wg.vertices)} vertices/{len(wg.edges)} edges "
               f"and {len(wd.vertices)}/{len(wd.edges)}", artifacts=arts)


# ------------------------------------------------------------ finite tables

def left_zero_stabilizer(_):
    s, t, phi = catalog.left_zero_cycle()
    cert = power_stabilizer(s, t, phi)
    ok = (cert.power == 4 and sorted(cert.first_power_image) == ["2", "3"]
          and sorted(cert.stabilized_image) == ["1", "2"] and cert.image_in_t
          and cert.bijective_on_complement)
    return _ok(ok, f"exponent {cert.power}, T phi = {sorted(cert.first_power_image)}, "
                   f"T phi^{cert.power} = {sorted(cert.stabilized_image)}")


def clifford_green(_):
    s = catalog.clifford_c4_c2()
    top = SubSemigroup(s, frozenset(range(4)))
    h = relative_green(top, "H")
    below = frozenset(range(4, 6))
    return _ok(green_index(top) == 2 and h.class_of(4) == below,
               f"green index {green_index(top)}; H-class of the complement {sorted(s.names(below))}")


CLAIMS: list[Claim] = [
    Claim("one-relator.confluent", "one-relator semigroup: two-rule system is complete", one_relator_confluent),
    Claim("one-relator.completion", "one-relator semigroup: completion of the single relation", one_relator_completion),
    Claim("one-relator.derivation", "one-relator semigroup: abab^3 = bab^2ab", one_relator_derivation),
    Claim("one-relator.phi-endomorphism", "one-relator semigroup: a->a, b->bab respects the relation", one_relator_phi_endo),
    Claim("one-relator.phi-surjective", "one-relator semigroup: generators covered", one_relator_phi_surjective),
    Claim("one-relator.phi-collision", "one-relator semigroup: ab^2a^2b^2 and b collide", one_relator_phi_collision),
    Claim("one-relator.non-hopf-search", "one-relator semigroup: search finds the witness", one_relator_non_hopf_search),
    Claim("extended.completion", "extension by f: completion terminates", extended_completion),
    Claim("extended.census", "extension by f: S = T plus f, Rees index 2", extended_census),
    Claim("extended.indecomposables", "extension by f: a and f are indecomposable", extended_indecomposables),
    Claim("extended.f-not-b", "extension by f: b cannot map to f", extended_f_not_b),
    Claim("free-monogenic.square", "free monogenic: x->x^2 injective, not surjective", free_monogenic_square),
    Claim("monogenic-extension.ball", "monogenic extension: confluent, ball of radius 6", monogenic_extension_ball),
    Claim("monogenic-extension.cayley", "monogenic extension: Cayley graph", monogenic_extension_cayley),
    Claim("monogenic-extension.square-roots", "monogenic extension: square roots", monogenic_extension_roots),
    Claim("monogenic-extension.endomorphisms", "monogenic extension: injective endomorphisms are automorphisms",
          monogenic_extension_endos),
    Claim("graphs.semigroup-sweep", "graph semigroups: structure and Rees index", graph_semigroup_sweep),
    Claim("graphs.edge-indices", "graph semigroups: indices of {e,n,0} for one edge", graph_edge_indices),
    Claim("graphs.roundtrip", "graph semigroups: endomorphism correspondence", graph_roundtrip),
    Claim("tree.shift", "infinite tree: shift is injective, misses z_1", tree_shift),
    Claim("tree.degrees", "infinite tree minus y_0: degree table", tree_degrees),
    Claim("tree.reflection", "infinite tree minus y_0: reflection is not an endomorphism", tree_reflection),
    Claim("tree.windows", "infinite trees: finite windows", tree_windows),
    Claim("finite.power-stabilizer", "finite Rees index: power stabilizer on a left-zero semigroup",
          left_zero_stabilizer),
    Claim("finite.clifford-green", "Clifford semigroup C4 > C2: one H-class below", clifford_green),
]


def select(only: str | None) -> list[Claim]:
    if not only:
        return list(CLAIMS)
    picked = [c for c in CLAIMS if c.id == only or c.id.startswith(only + ".")]
    if not picked:
        raise KeyError(only)
    return picked


def run_claims(only: str | None = None, outdir: Path | None = None) -> RunReport:
    records = []
    for claim in select(only):
        start = time.perf_counter()
        try:
            res = claim.check(outdir)
        except Exception as exc:  # a crash is a failed claim, not a crashed run
            res = ClaimResult("fail", f"{type(exc).__name__}: {exc}")
        records.append(ClaimRecord(claim.id, claim.anchor, res.status, res.detail,
                                   round(time.perf_counter() - start, 3), res.artifacts))
    return RunReport(records)
