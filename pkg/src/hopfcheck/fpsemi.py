"""Finitely presented semigroups as normal-form algebras.

An :class:`FpSemigroup` pairs a presentation with a complete rewriting
system for it; its elements are the irreducible words, multiplied by
concatenation followed by reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .core import Alphabet, Word
from .rewriting import RewritingSystem, complete


class ParentMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Element:
    word: Word
    parent: FpSemigroup = field(repr=False, compare=False)

    def __post_init__(self):
        if not self.parent.engine.is_irreducible(self.word):
            raise ValueError(f"{self.word} is not in normal form")

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def __str__(self) -> str:
        return str(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, Element) and self.parent is other.parent and self.word == other.word

    def __hash__(self):
        return hash(self.word)


class FpSemigroup:
    """``<A | R>`` together with a confluent engine presenting the same semigroup.

    If ``engine`` is omitted it is obtained by completing the oriented
    relations with ``fuel`` as the bound on new rules.
    """

    def __init__(self, alphabet: Alphabet, relations: Iterable[tuple[Word, Word]] = (),
                 engine: RewritingSystem | None = None, fuel: int = 50, name: str = ""):
        self.alphabet = alphabet
        self.relations = tuple(relations)
        self.name = name
        if engine is None:
            engine = complete(RewritingSystem.from_relations(alphabet, self.relations), fuel)
        if engine.alphabet != alphabet:
            raise ValueError("engine alphabet differs from presentation alphabet")
        ok, bad = engine.is_confluent()
        if not ok:
            raise ValueError(f"engine is not confluent: {bad[0]}")
        for u, v in self.relations:
            if engine.nf(u.code) != engine.nf(v.code):
                raise ValueError(f"engine does not identify {u} and {v}")
        self.engine = engine

    @classmethod
    def from_strings(cls, letters: str, relations: Iterable[tuple[str, str]] = (), **kw) -> FpSemigroup:
        a = Alphabet.from_string(letters)
        return cls(a, [(a.word(u), a.word(v)) for u, v in relations], **kw)

    def __repr__(self) -> str:
        rels = ", ".join(f"{u} = {v}" for u, v in self.relations)
        return f"FpSemigroup<{' '.join(self.alphabet)} | {rels}>"

    def is_free(self) -> bool:
        return len(self.engine) == 0

    def word(self, text: str) -> Word:
        return self.alphabet.word(text)

    def element(self, w: Word | str) -> Element:
        if isinstance(w, str):
            w = self.word(w)
        if w.is_empty():
            raise ValueError("the empty word is not a semigroup element")
        return Element(self.engine.normal_form(w), self)

    def _elt(self, code: str) -> Element:
        return Element(Word(self.alphabet, code), self)

    def generators(self) -> list[Element]:
        return [self.element(g) for g in self.alphabet.generators()]

    def equal(self, u: Word | str, v: Word | str) -> bool:
        return self.element(u) == self.element(v)

    def irreducible_codes(self, radius: int) -> list[str]:
        """All irreducible code strings of length 1..radius, shortlex-sorted.

        Grown one letter at a time: a one-letter extension of an
        irreducible word can only contain a redex ending at its last letter.
        """
        lhss = [l for l, _ in self.engine.codes]
        letters = [chr(k) for k in range(len(self.alphabet))]
        out: list[str] = []
        level = [""]
        for _ in range(radius):
            level = [w + c for w in level for c in letters
                     if not any((w + c).endswith(l) for l in lhss)]
            out.extend(level)
        return out


def multiply(a: Element, b: Element) -> Element:
    if a.parent is not b.parent:
        raise ParentMismatch("elements of different semigroups")
    s = a.parent
    return s._elt(s.engine.nf(a.word.code + b.word.code))


def equal(u: Word | str, v: Word | str, s: FpSemigroup) -> bool:
    return s.equal(u, v)


def enumerate_ball(s: FpSemigroup, radius: int) -> list[Element]:
    """All elements whose normal form has length <= radius, shortlex order."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    return [s._elt(c) for c in s.irreducible_codes(radius)]


@dataclass(frozen=True)
class CayleyEdge:
    source: Element
    label: str
    target: Element
    dangling: bool


@dataclass
class CayleyGraph:
    vertices: list[Element]
    edges: list[CayleyEdge]

    def adjacency(self) -> dict[str, list[tuple[str, str]]]:
        out: dict[str, list[tuple[str, str]]] = {str(v): [] for v in self.vertices}
        for e in self.edges:
            out[str(e.source)].append((e.label, str(e.target)))
        return out

    def to_dot(self, name: str = "cayley") -> str:
        """Right Cayley graph in DOT.  Dangling edges point at dashed
        placeholder nodes, one per target outside the ball."""
        ids = {v: f"n{i}" for i, v in enumerate(self.vertices)}
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for v, nid in ids.items():
            lines.append(f'  {nid} [label="{v}"];')
        ghosts: dict[Element, str] = {}
        for e in self.edges:
            src = ids[e.source]
            if e.dangling:
                if e.target not in ghosts:
                    ghosts[e.target] = f"d{len(ghosts)}"
                    lines.append(f'  {ghosts[e.target]} [label="{e.target}", style=dashed];')
                lines.append(f'  {src} -> {ghosts[e.target]} [label="{e.label}", style=dashed];')
            else:
                lines.append(f'  {src} -> {ids[e.target]} [label="{e.label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def cayley_graph(s: FpSemigroup, radius: int) -> CayleyGraph:
    ball = enumerate_ball(s, radius)
    inside = set(ball)
    gens = s.generators()
    edges = []
    for v in ball:
        for letter, g in zip(s.alphabet.letters, gens):
            w = v * g
            edges.append(CayleyEdge(v, letter, w, w not in inside))
    return CayleyGraph(ball, edges)


@dataclass
class IndecomposableReport:
    elements: list[Element]
    witnesses: dict[Element, tuple[Element, Element]]
    ball_radius: int
    search_radius: int
    bounded: bool = True  # the result over-approximates the true set

    def __str__(self) -> str:
        names = ", ".join(str(e) for e in self.elements)
        return f"indecomposable within search radius {self.search_radius}: {{{names}}}"


def indecomposables(s: FpSemigroup, ball_radius: int, search_radius: int) -> IndecomposableReport:
    """Elements of the ball with no factorisation ``u*v`` over the search ball.

    A factorisation found is exact; absence of one is only evidence, so
    the list over-approximates the indecomposable elements.
    """
    if search_radius < ball_radius:
        raise ValueError("search_radius must be >= ball_radius")
    candidates = enumerate_ball(s, ball_radius)
    codes = s.irreducible_codes(search_radius)
    nf = s.engine.nf
    todo = {c.word.code: c for c in candidates}
    witnesses: dict[Element, tuple[Element, Element]] = {}
    lengths = {c: len(c) for c in codes}
    for u in codes:
        if not todo:
            break
        for v in codes:
            # reduction never lengthens past |u|+|v|; nothing shorter can be hit
            if lengths[u] + lengths[v] < min(map(len, todo)):
                continue
            p = nf(u + v)
            if p in todo:
                witnesses[todo.pop(p)] = (s._elt(u), s._elt(v))
                if not todo:
                    break
    left = [c for c in candidates if c.word.code in todo]
    return IndecomposableReport(left, witnesses, ball_radius, search_radius)


def solve_square_root(s: FpSemigroup, target: Element | str, radius: int) -> list[Element]:
    """All ``u`` in the ball of the given radius with ``u*u = target``."""
    if isinstance(target, str):
        target = s.element(target)
    return [u for u in enumerate_ball(s, radius) if u * u == target]
