"""Finite simple graphs and the semigroup S_G built from one.

S_G has the vertices plus three extra elements ``e``, ``n``, ``0``: a
product of two vertices is ``e`` when they are adjacent and ``n``
otherwise, and every other product is ``0``.  Edges and non-edges of the
graph are therefore visible in the multiplication table, which is what
lets graph endomorphisms and semigroup endomorphisms be traded for one
another.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .finsemi import FiniteSemigroup, SubSemigroup, rees_index
from .morph import GeneratorMap, check_endomorphism, finite_endomorphisms

EXTRA = ("e", "n", "0")


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        vertices = tuple(str(v) for v in vertices)
        if len(set(vertices)) != len(vertices):
            raise GraphError("repeated vertex")
        vs = set(vertices)
        es = set()
        for edge in edges:
            pair = tuple(edge)
            if len(pair) != 2:
                raise GraphError(f"edge {pair} must have two endpoints")
            a, b = map(str, pair)
            if a == b:
                raise GraphError(f"loop at {a}")
            if a not in vs or b not in vs:
                raise GraphError(f"edge {a}-{b} uses an unknown vertex")
            es.add(frozenset((a, b)))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(es))

    def adjacent(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.edges

    def degree(self, v: str) -> int:
        return sum(1 for e in self.edges if v in e)

    def induced(self, keep: Iterable[str]) -> SimpleGraph:
        keep = set(keep)
        if not keep <= set(self.vertices):
            raise GraphError(f"{sorted(keep - set(self.vertices))} are not vertices")
        return SimpleGraph([v for v in self.vertices if v in keep],
                           [tuple(e) for e in self.edges if e <= keep])

    def sorted_edges(self) -> list[tuple[str, str]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        return sorted((tuple(sorted(e, key=pos.get)) for e in self.edges),
                      key=lambda p: (pos[p[0]], pos[p[1]]))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.sorted_edges()]}

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  "{v}";' for v in self.vertices]
        lines += [f'  "{a}" -- "{b}";' for a, b in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def graph_semigroup(g: SimpleGraph) -> FiniteSemigroup:
    clash = set(g.vertices) & set(EXTRA)
    if clash:
        raise GraphError(f"vertex names {sorted(clash)} are reserved")
    names = list(g.vertices) + list(EXTRA)
    nv = len(g.vertices)
    e, n, zero = nv, nv + 1, nv + 2
    table = [[zero] * len(names) for _ in names]
    for i, a in enumerate(g.vertices):
        for j, b in enumerate(g.vertices):
            table[i][j] = e if g.adjacent(a, b) else n
    return FiniteSemigroup(names, table)


def rees_index_of_induced(g: SimpleGraph, keep: Iterable[str]) -> int:
    """Rees index of S_D in S_G for the induced subgraph D, computed two ways."""
    keep = set(keep)
    sg = graph_semigroup(g)
    sd = graph_semigroup(g.induced(keep))
    # S_D must sit inside S_G as a subsemigroup with the same products
    emb = [sg.index(x) for x in sd.elements]
    for i, x in enumerate(emb):
        for j, y in enumerate(emb):
            if sg.table[x][y] != emb[sd.table[i][j]]:
                raise AssertionError("S_D is not a subsemigroup of S_G")
    via_table = rees_index(SubSemigroup(sg, frozenset(emb)))
    via_vertices = len(set(g.vertices) - keep) + 1
    if via_table != via_vertices:
        raise AssertionError(f"Rees index {via_table} != |V-W|+1 = {via_vertices}")
    return via_table


@dataclass(frozen=True)
class GraphEndo:
    mapping: tuple[tuple[str, str], ...]
    automorphism: bool

    def as_dict(self) -> dict[str, str]:
        return dict(self.mapping)


def injective_graph_endos(g: SimpleGraph) -> list[GraphEndo]:
    """Every injective edge-preserving self-map, by backtracking.

    On a finite graph each one permutes the edge set (injective on edges,
    same count) and so also preserves non-edges; ``automorphism`` records
    the direct check.
    """
    vs = g.vertices
    out = []
    img: list[str] = []

    def go(i: int):
        if i == len(vs):
            m = dict(zip(vs, img))
            auto = all(g.adjacent(m[a], m[b]) == g.adjacent(a, b)
                       for a, b in itertools.combinations(vs, 2))
            out.append(GraphEndo(tuple(zip(vs, img)), auto))
            return
        for cand in vs:
            if cand in img:
                continue
            if all(g.adjacent(cand, img[j]) for j in range(i) if g.adjacent(vs[i], vs[j])):
                img.append(cand)
                go(i + 1)
                img.pop()

    go(0)
    return out


@dataclass(frozen=True)
class FailureWitness:
    """A non-adjacent pair whose images are adjacent."""
    v1: str
    v2: str


def hat_extension(g: SimpleGraph, phi: Mapping[str, str]) -> GeneratorMap | FailureWitness:
    """Extend a vertex map by fixing e, n and 0; verify it on S_G.

    The extension is an endomorphism exactly when the vertex map sends
    non-adjacent pairs to non-adjacent pairs; otherwise the first offending
    pair is returned.
    """
    phi = dict(phi)
    if set(phi) != set(g.vertices) or not set(phi.values()) <= set(g.vertices):
        raise GraphError("phi must map the vertex set into itself")
    if len(set(phi.values())) != len(phi):
        raise GraphError("phi is not injective")
    for a, b in g.sorted_edges():
        if not g.adjacent(phi[a], phi[b]):
            raise GraphError(f"phi does not preserve the edge {a}-{b}")
    for a, b in itertools.combinations(g.vertices, 2):
        if not g.adjacent(a, b) and g.adjacent(phi[a], phi[b]):
            return FailureWitness(a, b)
    s = graph_semigroup(g)
    m = GeneratorMap(s, {**phi, **{x: x for x in EXTRA}})
    cert = check_endomorphism(m)
    if not cert.is_endomorphism:
        raise AssertionError(f"extension failed unexpectedly: {cert.endo_status}")
    return m


class RestrictionError(ValueError):
    def __init__(self, step: str, detail: str):
        super().__init__(f"{step}: {detail}")
        self.step = step


def null_subsemigroups(s: FiniteSemigroup, size: int = 3) -> list[frozenset[int]]:
    """Subsets of the given size on which every product is one fixed element of the subset."""
    out = []
    for combo in itertools.combinations(range(len(s)), size):
        prods = {s.table[x][y] for x in combo for y in combo}
        if len(prods) == 1 and prods <= set(combo):
            out.append(frozenset(combo))
    return out


def restrict_to_graph(g: SimpleGraph, psi: GeneratorMap | Mapping[str, str]) -> dict[str, str]:
    """Recover a graph endomorphism from an injective endomorphism of S_G.

    Walks the argument step by step: {e,n,0} is the only three-element
    null subsemigroup so it is mapped onto itself, 0 and n and e are then
    fixed, vertices go to vertices, and adjacency is preserved both ways.
    """
    s = graph_semigroup(g)
    if not isinstance(psi, GeneratorMap):
        psi = GeneratorMap(s, dict(psi))
    cert = check_endomorphism(psi)
    if not cert.is_endomorphism:
        raise RestrictionError("endomorphism", str(cert.endo_status))
    h = psi.full_map()
    if len(set(h)) != len(h):
        raise RestrictionError("injective", "psi identifies two elements")
    e, n, zero = (s.index(x) for x in EXTRA)
    x_set = frozenset((e, n, zero))
    nulls = null_subsemigroups(s)
    if nulls != [x_set]:
        raise RestrictionError("unique null", f"three-element null subsemigroups: {nulls}")
    if {h[x] for x in x_set} != x_set:
        raise RestrictionError("X fixed setwise", "psi moves {e,n,0}")
    for name, idx in (("0", zero), ("n", n), ("e", e)):
        if h[idx] != idx:
            raise RestrictionError(f"{name} fixed", f"{name} maps to {s.elements[h[idx]]}")
    vidx = range(len(g.vertices))
    if any(h[v] >= len(g.vertices) for v in vidx):
        raise RestrictionError("V into V", "a vertex maps outside V")
    restricted = {g.vertices[v]: g.vertices[h[v]] for v in vidx}
    for a, b in itertools.combinations(g.vertices, 2):
        if g.adjacent(a, b) != g.adjacent(restricted[a], restricted[b]):
            raise RestrictionError("adjacency", f"{a},{b}")
    return restricted


def injective_semigroup_endos(g: SimpleGraph) -> list[dict[str, str]]:
    """Injective endomorphisms of S_G by direct search on the table."""
    s = graph_semigroup(g)
    return [{s.elements[x]: s.elements[h[x]] for x in range(len(s))}
            for h in finite_endomorphisms(s, injective_only=True)]


# ------------------------------------------------------------ graph censuses

def all_labeled_graphs(n: int) -> list[SimpleGraph]:
    vs = [f"v{i}" for i in range(n)]
    pairs = list(itertools.combinations(vs, 2))
    return [SimpleGraph(vs, [p for k, p in enumerate(pairs) if mask >> k & 1])
            for mask in range(1 << len(pairs))]


def canonical_form(g: SimpleGraph) -> tuple:
    """Lexicographically least adjacency pattern over all relabellings."""
    vs = g.vertices
    best = None
    for perm in itertools.permutations(range(len(vs))):
        key = tuple(sorted(tuple(sorted((perm[vs.index(a)], perm[vs.index(b)])))
                           for a, b in (tuple(e) for e in g.edges)))
        if best is None or key < best:
            best = key
    return (len(vs), best)


def isomorphism_classes(graphs: Sequence[SimpleGraph]) -> list[SimpleGraph]:
    seen = {}
    for g in graphs:
        seen.setdefault(canonical_form(g), g)
    return list(seen.values())


def random_graph(rng: random.Random, max_vertices: int, p: float = 0.5) -> SimpleGraph:
    n = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(n)]
    return SimpleGraph(vs, [pr for pr in itertools.combinations(vs, 2) if rng.random() < p])
