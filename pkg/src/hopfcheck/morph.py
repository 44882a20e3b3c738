"""Morphisms given on generators, and certificates about them.

Over a finitely presented semigroup injectivity and surjectivity are only
semi-decidable, so a certificate records what was actually established:
a collision or a covering witness is exact, while "no collision" or
"uncovered" hold up to a stated radius unless one of the exactness rules
below applies.

* finite order: if some power of the map fixes every generator the map is
  a bijection;
* free code: on a free semigroup an endomorphism is injective iff the
  generator images form a code (Sardinas-Patterson test);
* length rule: if every rule has ``|rhs| >= 2`` and every generator image
  has length >= 2, no word maps to a single letter, so generators left
  uncovered are uncovered for good.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Union

from .core import Word, shortlex_key
from .finsemi import FiniteSemigroup
from .fpsemi import Element, FpSemigroup, enumerate_ball

Semigroup = Union[FpSemigroup, FiniteSemigroup]

FINITE_ORDER_LIMIT = 12


# ------------------------------------------------------------------ statuses

@dataclass(frozen=True)
class Verified:
    def __str__(self):
        return "verified endomorphism"


@dataclass(frozen=True)
class FailedRelation:
    relation: tuple[str, str]
    images: tuple[str, str]

    def __str__(self):
        (u, v), (x, y) = self.relation, self.images
        return f"relation {u} = {v} maps to {x} != {y}"


@dataclass(frozen=True)
class Collision:
    u: str
    v: str
    image: str

    def __str__(self):
        return f"collision: {self.u} and {self.v} both map to {self.image}"


@dataclass(frozen=True)
class NoCollisionUpTo:
    radius: int

    def __str__(self):
        return f"no collision among elements of length <= {self.radius}"


@dataclass(frozen=True)
class ExactInjective:
    reason: str

    def __str__(self):
        return f"injective ({self.reason})"


@dataclass(frozen=True)
class GeneratorsCovered:
    """Exact surjectivity: the image is a subsemigroup holding every generator."""
    witnesses: tuple[tuple[str, str], ...]  # (generator, preimage)

    def __str__(self):
        return "surjective: " + ", ".join(f"{g} <- {w}" for g, w in self.witnesses)


@dataclass(frozen=True)
class UncoveredUpTo:
    radius: int
    uncovered: tuple[str, ...]

    def __str__(self):
        return f"no preimage of {', '.join(self.uncovered)} among lengths <= {self.radius}"


@dataclass(frozen=True)
class ExactNonSurjective:
    uncovered: tuple[str, ...]
    reason: str

    def __str__(self):
        return f"not surjective, {', '.join(self.uncovered)} not in image ({self.reason})"


EXACT_INJECTIVITY = (ExactInjective, Collision)
EXACT_SURJECTIVITY = (GeneratorsCovered, ExactNonSurjective)


@dataclass(frozen=True)
class NotFound:
    reason: str

    def __str__(self):
        return f"not found: {self.reason}"


# ---------------------------------------------------------------------- maps

@dataclass(frozen=True)
class GeneratorMap:
    """A map on generators; ``images`` maps generator name to image text.

    For an :class:`FpSemigroup` the generators are the letters and images
    are normal-form words.  For a :class:`FiniteSemigroup` the keys are
    element names of a generating set and images are element names.
    """

    source: Semigroup = field(repr=False, compare=False)
    images: tuple[tuple[str, str], ...]

    def __init__(self, source: Semigroup, images: Mapping[str, str | Word | Element]):
        object.__setattr__(self, "source", source)
        if isinstance(source, FpSemigroup):
            missing = set(source.alphabet.letters) - set(images)
            extra = set(images) - set(source.alphabet.letters)
            if missing or extra:
                raise ValueError(f"images must be given exactly on {source.alphabet.letters}")
            norm = []
            for g in source.alphabet.letters:
                img = images[g]
                elt = img if isinstance(img, Element) else source.element(
                    img if isinstance(img, Word) else str(img))
                norm.append((g, elt.word.code))
            object.__setattr__(self, "images", tuple(norm))
        else:
            for g, img in images.items():
                source.index(g)
                source.index(str(img))
            object.__setattr__(self, "images", tuple((g, str(images[g])) for g in images))

    @classmethod
    def parse(cls, source: Semigroup, text: str) -> GeneratorMap:
        """``"a->a, b->bab"``."""
        images = {}
        for part in text.split(","):
            if not part.strip():
                continue
            if "->" not in part:
                raise ValueError(f"expected 'g->word' in {part.strip()!r}")
            g, w = (x.strip() for x in part.split("->", 1))
            images[g] = w
        return cls(source, images)

    @property
    def finite(self) -> bool:
        return isinstance(self.source, FiniteSemigroup)

    def __str__(self) -> str:
        if self.finite:
            return ", ".join(f"{g}->{w}" for g, w in self.images)
        fmt = self.source.alphabet.format
        return ", ".join(f"{g}->{fmt(w)}" for g, w in self.images)

    def sort_key(self):
        return tuple((len(w), w) for _, w in self.images)

    # fp backend
    def apply_code(self, code: str) -> str:
        table = [w for _, w in self.images]
        return self.source.engine.nf("".join(table[ord(c)] for c in code))

    def __call__(self, x):
        if self.finite:
            return self.source.elements[self.full_map()[self.source.index(x)]]
        s = self.source
        code = x.word.code if isinstance(x, Element) else (
            x.code if isinstance(x, Word) else s.word(x).code)
        return s._elt(self.apply_code(code))

    # finite backend
    def full_map(self) -> list[int]:
        """Extend generator images to every element; raise if ill defined."""
        s = self.source
        ext, conflict = _extend(s, {s.index(g): s.index(w) for g, w in self.images})
        if conflict is not None:
            raise ValueError(conflict)
        return ext


def _extend(s: FiniteSemigroup, gens: dict[int, int]):
    """BFS over words in the generators; returns (map, None) or (None, message)."""
    img = dict(gens)
    queue = deque(img)
    while queue:
        x = queue.popleft()
        for g, hg in gens.items():
            p = s.table[x][g]
            hp = s.table[img[x]][hg]
            if p not in img:
                img[p] = hp
                queue.append(p)
            elif img[p] != hp:
                e = s.elements
                return None, f"{e[p]} would map to both {e[img[p]]} and {e[hp]}"
    if len(img) != len(s):
        missing = [s.elements[i] for i in range(len(s)) if i not in img]
        return None, f"generators do not reach {missing}"
    return [img[i] for i in range(len(s))], None


def compose(first: GeneratorMap, second: GeneratorMap) -> GeneratorMap:
    """Apply ``first`` then ``second``."""
    if first.source is not second.source:
        raise ValueError("maps act on different semigroups")
    s = first.source
    if first.finite:
        return GeneratorMap(s, {g: second(w) for g, w in first.images})
    return GeneratorMap(s, {g: Word(s.alphabet, second.apply_code(w)) for g, w in first.images})


def square(m: GeneratorMap) -> GeneratorMap:
    return compose(m, m)


def identity_map(s: Semigroup) -> GeneratorMap:
    if isinstance(s, FpSemigroup):
        return GeneratorMap(s, {g: g for g in s.alphabet.letters})
    return GeneratorMap(s, {e: e for e in s.elements})


# -------------------------------------------------------------- certificates

@dataclass
class EndoCertificate:
    map: GeneratorMap
    endo_status: Verified | FailedRelation
    injectivity: object = None
    surjectivity: object = None

    @property
    def is_endomorphism(self) -> bool:
        return isinstance(self.endo_status, Verified)

    @property
    def collision(self) -> Collision | None:
        return self.injectivity if isinstance(self.injectivity, Collision) else None

    @property
    def surjective(self) -> bool:
        return isinstance(self.surjectivity, GeneratorsCovered)

    @property
    def injective_evidence(self) -> bool:
        return isinstance(self.injectivity, (ExactInjective, NoCollisionUpTo))

    @property
    def nonsurjective_evidence(self) -> bool:
        return isinstance(self.surjectivity, (ExactNonSurjective, UncoveredUpTo))

    def to_json(self) -> dict:
        return {
            "map": str(self.map),
            "endomorphism": str(self.endo_status),
            "injectivity": _status_json(self.injectivity),
            "surjectivity": _status_json(self.surjectivity),
        }


def _status_json(st) -> dict | None:
    if st is None:
        return None
    out = {"status": type(st).__name__, "text": str(st)}
    for k, v in vars(st).items():
        out[k] = [list(p) for p in v] if k == "witnesses" else (list(v) if isinstance(v, tuple) else v)
    return out


def check_endomorphism(m: GeneratorMap) -> EndoCertificate:
    s = m.source
    if m.finite:
        ext, conflict = _extend(s, {s.index(g): s.index(w) for g, w in m.images})
        if conflict is not None:
            return EndoCertificate(m, FailedRelation(("well defined", ""), (conflict, "")))
        for x in range(len(s)):
            for y in range(len(s)):
                a, b = ext[s.table[x][y]], s.table[ext[x]][ext[y]]
                if a != b:
                    e = s.elements
                    return EndoCertificate(m, FailedRelation(
                        (f"({e[x]}{e[y]})h", f"({e[x]}h)({e[y]}h)"), (e[a], e[b])))
        return EndoCertificate(m, Verified())
    fmt = s.alphabet.format
    for u, v in s.relations:
        a, b = m.apply_code(u.code), m.apply_code(v.code)
        if a != b:
            return EndoCertificate(m, FailedRelation((str(u), str(v)), (fmt(a), fmt(b))))
    return EndoCertificate(m, Verified())


def _finite_order(m: GeneratorMap) -> int | None:
    gens = [w for _, w in m.images]
    current = m
    for n in range(1, FINITE_ORDER_LIMIT + 1):
        if [w for _, w in current.images] == [chr(k) for k in range(len(gens))]:
            return n
        current = compose(current, m)
    return None


def is_code(words: list[str]) -> bool:
    """Sardinas-Patterson: do the words freely generate a free subsemigroup?"""
    if len(set(words)) != len(words):
        return False
    c = set(words)

    def quotients(a: set[str], b: set[str]) -> set[str]:
        return {y[len(x):] for x in a for y in b if y.startswith(x) and len(y) > len(x)}

    current = quotients(c, c)
    seen: set[frozenset[str]] = set()
    while current:
        if "" in current or current & c:
            return False
        key = frozenset(current)
        if key in seen:
            return True
        seen.add(key)
        current = quotients(c, current) | quotients(current, c)
    return True


def _length_rule(m: GeneratorMap) -> bool:
    s = m.source
    return (all(len(r) >= 2 for _, r in s.engine.codes)
            and all(len(w) >= 2 for _, w in m.images))


def check_injective(m: GeneratorMap, radius: int):
    s = m.source
    if m.finite:
        ext = m.full_map()
        seen: dict[int, int] = {}
        for x in range(len(s)):
            if ext[x] in seen:
                e = s.elements
                return Collision(e[x], e[seen[ext[x]]], e[ext[x]])
            seen[ext[x]] = x
        return ExactInjective("finite semigroup, checked on every element")
    # Collisions are ranked by their shortlex-smaller member, then the
    # smaller partner, so the element that collides earliest is reported.
    fmt = s.alphabet.format
    fibres: dict[str, list[str]] = {}
    for code in s.irreducible_codes(radius):
        fibres.setdefault(m.apply_code(code), []).append(code)
    clashes = [(f[0], f[1], img) for img, f in fibres.items() if len(f) > 1]
    if clashes:
        v, u, img = min(clashes, key=lambda c: (shortlex_key(c[0]), shortlex_key(c[1])))
        return Collision(fmt(u), fmt(v), fmt(img))
    order = _finite_order(m)
    if order is not None:
        return ExactInjective(f"the map has finite order {order}")
    if s.is_free() and is_code([w for _, w in m.images]):
        return ExactInjective("free semigroup and the generator images form a code")
    return NoCollisionUpTo(radius)


def verify_collision(m: GeneratorMap, u: str, v: str) -> Collision | None:
    """Re-check a claimed collision: u, v distinct elements with equal images."""
    s = m.source
    if m.finite:
        hu, hv = m(u), m(v)
        return Collision(u, v, hu) if u != v and hu == hv else None
    eu, ev = s.element(u), s.element(v)
    if eu == ev:
        return None
    iu, iv = m(eu), m(ev)
    return Collision(str(eu), str(ev), str(iu)) if iu == iv else None


def check_surjective(m: GeneratorMap, radius: int):
    s = m.source
    if m.finite:
        ext = m.full_map()
        missing = sorted(set(range(len(s))) - set(ext))
        if missing:
            return ExactNonSurjective(tuple(s.elements[i] for i in missing), "finite semigroup")
        inv = {ext[x]: x for x in reversed(range(len(s)))}
        return GeneratorsCovered(tuple((g, s.elements[inv[s.index(g)]]) for g, _ in m.images))
    fmt = s.alphabet.format
    targets = {s.engine.nf(chr(k)): g for k, g in enumerate(s.alphabet.letters)}
    found: dict[str, str] = {}
    for code in s.irreducible_codes(radius):
        img = m.apply_code(code)
        if img in targets and targets[img] not in found:
            found[targets[img]] = fmt(code)
            if len(found) == len(targets):
                break
    if len(found) == len(targets):
        return GeneratorsCovered(tuple((g, found[g]) for g in s.alphabet.letters if g in found))
    uncovered = tuple(g for g in s.alphabet.letters if g not in found and g in targets.values())
    if _length_rule(m):
        single = tuple(g for g in uncovered if len(s.engine.nf(s.alphabet.parse(g))) == 1)
        if single:
            return ExactNonSurjective(single, "length rule: every image has length >= 2")
    return UncoveredUpTo(radius, uncovered)


def certify(m: GeneratorMap, radius: int) -> EndoCertificate:
    cert = check_endomorphism(m)
    if cert.is_endomorphism:
        cert.injectivity = check_injective(m, radius)
        cert.surjectivity = check_surjective(m, radius)
    return cert


# ------------------------------------------------------------------ searches

def candidate_maps(s: Semigroup, image_length: int = 1):
    """All generator maps, images of length <= image_length (fp) or any element (finite)."""
    if isinstance(s, FiniteSemigroup):
        for imgs in itertools.product(s.elements, repeat=len(s)):
            yield GeneratorMap(s, dict(zip(s.elements, imgs)))
        return
    ball = [e.word for e in enumerate_ball(s, image_length)]
    for imgs in itertools.product(ball, repeat=len(s.alphabet)):
        yield GeneratorMap(s, dict(zip(s.alphabet.letters, imgs)))


def _finite_endomorphisms(s: FiniteSemigroup, injective_only: bool = False) -> list[list[int]]:
    """Backtracking over full element maps, pruning on assigned products."""
    n = len(s)
    t = s.table
    out = []
    img = [-1] * n

    def ok(x: int) -> bool:
        for y in range(x + 1):
            for a, b in ((x, y), (y, x)):
                p = t[a][b]
                if img[p] != -1 and img[p] != t[img[a]][img[b]]:
                    return False
        # products landing on x must agree with its new image
        for a in range(x + 1):
            for b in range(x + 1):
                if t[a][b] == x and img[x] != t[img[a]][img[b]]:
                    return False
        return True

    def go(x: int):
        if x == n:
            out.append(list(img))
            return
        for v in range(n):
            if injective_only and v in img[:x]:
                continue
            img[x] = v
            if ok(x):
                go(x + 1)
        img[x] = -1

    go(0)
    return out


def finite_endomorphisms(s: FiniteSemigroup, injective_only: bool = False) -> list[list[int]]:
    return _finite_endomorphisms(s, injective_only)


def find_endomorphisms(s: Semigroup, image_length: int = 1, radius: int = 6) -> list[EndoCertificate]:
    """Every certified endomorphism within the bounds, in canonical order.

    fp backend: generator images range over normal forms of length up to
    ``image_length``, ordered lexicographically by shortlex image tuples.
    Finite backend: exhaustive over all element maps.
    """
    if isinstance(s, FiniteSemigroup):
        maps = [GeneratorMap(s, {s.elements[x]: s.elements[h[x]] for x in range(len(s))})
                for h in _finite_endomorphisms(s)]
        return [certify(m, radius) for m in maps]
    out = []
    for m in candidate_maps(s, image_length):
        cert = check_endomorphism(m)
        if cert.is_endomorphism:
            out.append(certify(m, radius))
    return out


def non_hopf_witness(s: Semigroup, image_length: int, radius: int):
    """A surjective endomorphism carrying a collision, or :class:`NotFound`."""
    if isinstance(s, FiniteSemigroup):
        return NotFound("surjective self-maps of a finite set are bijective")
    for cert in find_endomorphisms(s, image_length, radius):
        if cert.surjective and cert.collision is not None:
            return cert
    return NotFound(f"no surjective non-injective endomorphism with image length <= "
                    f"{image_length} found at radius {radius}")


def non_cohopf_witness(s: Semigroup, image_length: int, radius: int):
    """An injective (bounded or exact) endomorphism that is not surjective.

    The returned certificate's statuses say which parts are exact.
    """
    if isinstance(s, FiniteSemigroup):
        return NotFound("injective self-maps of a finite set are bijective")
    for cert in find_endomorphisms(s, image_length, radius):
        if cert.injective_evidence and cert.nonsurjective_evidence:
            return cert
    return NotFound(f"no injective non-surjective endomorphism with image length <= "
                    f"{image_length} found at radius {radius}")


def confidence(cert: EndoCertificate) -> str:
    exact = (isinstance(cert.injectivity, EXACT_INJECTIVITY)
             and isinstance(cert.surjectivity, EXACT_SURJECTIVITY))
    return "exact" if exact else "bounded"
