"""Infinite graphs given by indexed vertex families and affine edge rules.

A family is a set of vertices ``name_i`` for ``i`` in an :class:`IndexSet`
(an integer interval, possibly unbounded, minus finitely many points).
An edge rule ``A i+a ~ B i+b`` adds the edge between ``A_(i+a)`` and
``B_(i+b)`` for every parameter ``i`` in the rule's range for which both
endpoints exist, so deleting a vertex from a family domain takes the
induced subgraph.

Vertex maps act on each family by a unit-slope affine map (``i -> i+c`` or
``i -> -i+c``) plus finitely many exceptional assignments.  Every question
asked about such a map reduces to unions and differences of index sets,
which stay in the same finite form, so the checks are exact.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graphs import SimpleGraph

Vertex = tuple[str, int]
UNREACHED_CAP = 64  # finite gaps longer than this are truncated in reports


def vname(v: Vertex) -> str:
    return f"{v[0]}_{v[1]}"


class SchematicError(ValueError):
    pass


class SchematicMapError(SchematicError):
    """The map sends some vertex outside its target family's domain."""

    def __init__(self, failures: list[str]):
        super().__init__("; ".join(failures))
        self.failures = failures


@dataclass(frozen=True)
class IndexSet:
    """``{i : lo <= i <= hi} - excluded``; ``None`` bounds are infinite."""

    lo: int | None = None
    hi: int | None = None
    excluded: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "excluded", frozenset(
            e for e in self.excluded if self._in_interval(e)))

    @classmethod
    def point(cls, i: int) -> IndexSet:
        return cls(i, i)

    def _in_interval(self, i: int) -> bool:
        return (self.lo is None or i >= self.lo) and (self.hi is None or i <= self.hi)

    def __contains__(self, i: int) -> bool:
        return self._in_interval(i) and i not in self.excluded

    def is_finite(self) -> bool:
        return self.lo is not None and self.hi is not None

    def is_empty(self) -> bool:
        if self.lo is not None and self.hi is not None:
            return self.hi < self.lo or all(i in self.excluded for i in range(self.lo, self.hi + 1))
        return False

    def elements(self) -> list[int]:
        if not self.is_finite():
            raise SchematicError("infinite index set")
        return [i for i in range(self.lo, self.hi + 1) if i not in self.excluded]

    def sample(self) -> int:
        """The least element if bounded below, else the greatest, else the one nearest 0."""
        if self.is_empty():
            raise SchematicError("empty index set")
        if self.lo is not None:
            return next(i for i in itertools.count(self.lo) if i in self)
        if self.hi is not None:
            return next(i for i in itertools.count(self.hi, -1) if i in self)
        return next(i for k in itertools.count() for i in (k, -k) if i in self)

    def intersect(self, other: IndexSet) -> IndexSet:
        lo = _max_bound(self.lo, other.lo)
        hi = _min_bound(self.hi, other.hi)
        return IndexSet(lo, hi, self.excluded | other.excluded)

    def affine(self, sign: int, offset: int) -> IndexSet:
        """Image under ``i -> sign*i + offset``."""
        ex = frozenset(sign * e + offset for e in self.excluded)
        if sign == 1:
            return IndexSet(_shift(self.lo, offset), _shift(self.hi, offset), ex)
        return IndexSet(_shift(_neg(self.hi), offset), _shift(_neg(self.lo), offset), ex)

    def minus(self, other: IndexSet) -> list[IndexSet]:
        pieces = []
        if other.lo is not None:
            pieces.append(self.intersect(IndexSet(None, other.lo - 1)))
        if other.hi is not None:
            pieces.append(self.intersect(IndexSet(other.hi + 1, None)))
        pieces += [IndexSet.point(e) for e in sorted(other.excluded) if e in self]
        return [p for p in pieces if not p.is_empty()]

    def window(self, lo: int, hi: int) -> list[int]:
        return self.intersect(IndexSet(lo, hi)).elements()

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        ex = f" minus {sorted(self.excluded)}" if self.excluded else ""
        return f"[{lo}, {hi}]{ex}"


def _shift(b, c):
    return None if b is None else b + c


def _neg(b):
    return None if b is None else -b


def _max_bound(a, b):
    return b if a is None else a if b is None else max(a, b)


def _min_bound(a, b):
    return b if a is None else a if b is None else min(a, b)


def subtract_all(base: list[IndexSet], cover: Iterable[IndexSet]) -> list[IndexSet]:
    pieces = list(base)
    for c in cover:
        pieces = [q for p in pieces for q in p.minus(c)]
    return pieces


@dataclass(frozen=True)
class Family:
    name: str
    domain: IndexSet


@dataclass(frozen=True)
class EdgeRule:
    """``a_fam (i + a_off) ~ b_fam (i + b_off)`` for ``i`` in ``params``."""

    a_fam: str
    a_off: int
    b_fam: str
    b_off: int
    params: IndexSet = IndexSet()

    def __str__(self) -> str:
        def term(f, o):
            return f"{f}_i" if o == 0 else f"{f}_(i{o:+d})"
        return f"{term(self.a_fam, self.a_off)} ~ {term(self.b_fam, self.b_off)} for i in {self.params}"


class SchematicGraph:
    def __init__(self, families: Iterable[Family], rules: Iterable[EdgeRule]):
        self.families = {f.name: f for f in families}
        self.rules = list(rules)
        for r in self.rules:
            for fam in (r.a_fam, r.b_fam):
                if fam not in self.families:
                    raise SchematicError(f"rule {r} uses unknown family {fam}")
            if r.a_fam == r.b_fam and r.a_off == r.b_off:
                raise SchematicError(f"rule {r} would create loops")
        for r1, r2 in itertools.combinations(self.rules, 2):
            for shared in self._shared_params(r1, r2):
                if not shared.is_empty():
                    raise SchematicError(f"rules {r1} and {r2} produce the same edge "
                                         f"at i = {shared.sample()}")

    def instance_params(self, r: EdgeRule) -> IndexSet:
        da = self.families[r.a_fam].domain.affine(1, -r.a_off)
        db = self.families[r.b_fam].domain.affine(1, -r.b_off)
        return r.params.intersect(da).intersect(db)

    def _shared_params(self, r1: EdgeRule, r2: EdgeRule) -> list[IndexSet]:
        out = []
        p1, p2 = self.instance_params(r1), self.instance_params(r2)
        if (r1.a_fam, r1.b_fam) == (r2.a_fam, r2.b_fam) and r1.b_off - r1.a_off == r2.b_off - r2.a_off:
            out.append(p1.intersect(p2.affine(1, r2.a_off - r1.a_off)))
        if (r1.a_fam, r1.b_fam) == (r2.b_fam, r2.a_fam) and r1.b_off - r1.a_off == r2.a_off - r2.b_off:
            out.append(p1.intersect(p2.affine(1, r2.b_off - r1.a_off)))
        return out

    # -------------------------------------------------------------- queries

    def has_vertex(self, v: Vertex) -> bool:
        fam, i = v
        return fam in self.families and i in self.families[fam].domain

    def _check_vertex(self, v: Vertex) -> None:
        if not self.has_vertex(v):
            raise SchematicError(f"{vname(v)} is not a vertex")

    def neighbours(self, v: Vertex) -> list[Vertex]:
        self._check_vertex(v)
        fam, p = v
        out = []
        for r in self.rules:
            params = self.instance_params(r)
            if fam == r.a_fam and p - r.a_off in params:
                out.append((r.b_fam, p - r.a_off + r.b_off))
            if fam == r.b_fam and p - r.b_off in params:
                out.append((r.a_fam, p - r.b_off + r.a_off))
        return out

    def degree(self, v: Vertex) -> int:
        return len(self.neighbours(v))

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        if not (self.has_vertex(u) and self.has_vertex(v)):
            return False
        return v in self.neighbours(u)

    def window(self, lo: int, hi: int) -> SimpleGraph:
        """Induced finite subgraph on all vertices with index in [lo, hi]."""
        if lo > hi:
            raise SchematicError("empty window")
        verts = [(f, i) for f in self.families for i in self.families[f].domain.window(lo, hi)]
        inside = set(verts)
        edges = []
        for v in verts:
            for w in self.neighbours(v):
                if w in inside and (vname(w), vname(v)) not in edges:
                    edges.append((vname(v), vname(w)))
        return SimpleGraph([vname(v) for v in verts], edges)

    def remove_vertex(self, v: Vertex) -> SchematicGraph:
        self._check_vertex(v)
        fam, i = v
        fams = [Family(f.name, IndexSet(f.domain.lo, f.domain.hi, f.domain.excluded | {i}))
                if f.name == fam else f for f in self.families.values()]
        return SchematicGraph(fams, self.rules)

    # ------------------------------------------------------------------ I/O

    @classmethod
    def from_json(cls, data: dict | str, n_start: int = 1) -> SchematicGraph:
        if isinstance(data, str):
            data = json.loads(data)
        fams = []
        for f in data["families"]:
            fams.append(Family(f["name"], _parse_domain(f.get("domain", "Z"), f.get("exclude", ()),
                                                        n_start)))
        rules = []
        for rule in data["rules"]:
            if len(rule) not in (2, 3):
                raise SchematicError(f"rule {rule} needs two terms and an optional range")
            (fa, va, oa), (fb, vb, ob) = _parse_term(rule[0]), _parse_term(rule[1])
            if va != vb:
                raise SchematicError(f"rule {rule} mixes index variables")
            params = _parse_range(rule[2], va) if len(rule) == 3 else IndexSet()
            rules.append(EdgeRule(fa, oa, fb, ob, params))
        return cls(fams, rules)


_TERM = re.compile(r"\s*([A-Za-z_]\w*)\s+(-?)\s*([a-z])\s*(?:([+-])\s*(\d+))?\s*\Z")


def _parse_term(text: str):
    m = _TERM.match(text)
    if m is None or m.group(2):
        raise SchematicError(f"cannot parse rule term {text!r}")
    off = int(m.group(5) or 0) * (-1 if m.group(4) == "-" else 1)
    return m.group(1), m.group(3), off


def _parse_range(text: str, var: str) -> IndexSet:
    lo = hi = None
    for part in text.split(","):
        m = re.fullmatch(rf"\s*{var}\s*(>=|<=)\s*(-?\d+)\s*", part)
        if m is None:
            raise SchematicError(f"cannot parse range {text!r}")
        if m.group(1) == ">=":
            lo = int(m.group(2))
        else:
            hi = int(m.group(2))
    return IndexSet(lo, hi)


def _parse_domain(text: str, exclude, n_start: int) -> IndexSet:
    text = text.replace(" ", "")
    if text == "Z":
        base = IndexSet()
    elif text == "N":
        base = IndexSet(n_start, None)
    else:
        m = re.fullmatch(r"N>=(-?\d+)", text)
        if m is None:
            raise SchematicError(f"unknown domain {text!r}")
        base = IndexSet(int(m.group(1)), None)
    return IndexSet(base.lo, base.hi, frozenset(int(e) for e in exclude))


# ---------------------------------------------------------------- family maps

@dataclass(frozen=True)
class AffineIndexMap:
    target: str
    sign: int
    offset: int

    def __call__(self, i: int) -> int:
        return self.sign * i + self.offset

    def __str__(self) -> str:
        i = "i" if self.sign == 1 else "-i"
        return f"{self.target}_({i}{self.offset:+d})" if self.offset else f"{self.target}_{i}"


@dataclass
class FamilyMap:
    maps: dict[str, AffineIndexMap]
    exceptions: dict[Vertex, Vertex] = field(default_factory=dict)

    def image(self, v: Vertex) -> Vertex:
        if v in self.exceptions:
            return self.exceptions[v]
        a = self.maps[v[0]]
        return (a.target, a(v[1]))

    def compose(self, then: FamilyMap) -> FamilyMap:
        """Apply self, then ``then`` (exceptions are not supported here)."""
        if self.exceptions or then.exceptions:
            raise SchematicError("composition with exceptional assignments is not supported")
        out = {}
        for fam, a in self.maps.items():
            b = then.maps[a.target]
            out[fam] = AffineIndexMap(b.target, a.sign * b.sign, b.sign * a.offset + b.offset)
        return FamilyMap(out)

    @classmethod
    def shift(cls, families: Iterable[str], by: int = 1) -> FamilyMap:
        return cls({f: AffineIndexMap(f, 1, by) for f in families})

    @classmethod
    def reflection(cls, families: Iterable[str], about: int = 0) -> FamilyMap:
        return cls({f: AffineIndexMap(f, -1, 2 * about) for f in families})

    @classmethod
    def identity(cls, families: Iterable[str]) -> FamilyMap:
        return cls.shift(families, 0)

    @classmethod
    def from_json(cls, data: dict | str) -> FamilyMap:
        """``{"maps": {"x": "x i+1"}, "exceptions": {"z 1": "z 5"}}``."""
        if isinstance(data, str):
            data = json.loads(data)
        maps = {}
        for fam, text in data["maps"].items():
            m = _TERM.match(text)
            if m is None:
                raise SchematicError(f"cannot parse map term {text!r}")
            sign = -1 if m.group(2) else 1
            off = int(m.group(5) or 0) * (-1 if m.group(4) == "-" else 1)
            maps[fam] = AffineIndexMap(m.group(1), sign, off)
        exc = {}
        for src, dst in data.get("exceptions", {}).items():
            exc[_parse_vertex(src)] = _parse_vertex(dst)
        return cls(maps, exc)


def _parse_vertex(text: str) -> Vertex:
    m = re.fullmatch(r"\s*([A-Za-z]\w*?)[\s_]*(-?\d+)\s*", text)
    if m is None:
        raise SchematicError(f"cannot parse vertex {text!r}")
    return m.group(1), int(m.group(2))


parse_vertex = _parse_vertex


@dataclass
class EndoReport:
    endomorphism: bool
    injective: bool
    surjective: bool
    unreached: list[Vertex]
    failures: list[str]
    notes: list[str]

    def to_json(self) -> dict:
        return {"endomorphism": self.endomorphism, "injective": self.injective,
                "surjective": self.surjective, "unreached": [vname(v) for v in self.unreached],
                "failures": self.failures, "notes": self.notes}


def _affine_part(g: SchematicGraph, m: FamilyMap, fam: str) -> IndexSet:
    """Domain of ``fam`` minus its exceptional indices."""
    d = g.families[fam].domain
    exc = {i for f, i in m.exceptions if f == fam}
    return IndexSet(d.lo, d.hi, d.excluded | exc)


def _domain_failures(g: SchematicGraph, m: FamilyMap) -> list[str]:
    out = []
    for fam in g.families:
        if fam not in m.maps:
            out.append(f"family {fam} has no image")
            continue
        a = m.maps[fam]
        if a.target not in g.families:
            out.append(f"family {fam} maps to unknown family {a.target}")
            continue
        image = _affine_part(g, m, fam).affine(a.sign, a.offset)
        bad = image.minus(g.families[a.target].domain)
        if bad:
            j = bad[0].sample()
            i = a.sign * (j - a.offset)
            out.append(f"{vname((fam, i))} maps to {vname((a.target, j))}, "
                       f"outside the domain of {a.target}")
    for v, w in m.exceptions.items():
        if not g.has_vertex(v):
            out.append(f"exception for non-vertex {vname(v)}")
        elif not g.has_vertex(w):
            out.append(f"{vname(v)} maps to non-vertex {vname(w)}")
    return out


def _rule_failures(g: SchematicGraph, m: FamilyMap) -> list[str]:
    out = []
    for r in g.rules:
        params = g.instance_params(r)
        exc_params = set()
        for (f, i) in m.exceptions:
            if f == r.a_fam and i - r.a_off in params:
                exc_params.add(i - r.a_off)
            if f == r.b_fam and i - r.b_off in params:
                exc_params.add(i - r.b_off)
        # exceptional instances are finitely many: check them directly
        for i in sorted(exc_params):
            u, v = (r.a_fam, i + r.a_off), (r.b_fam, i + r.b_off)
            if not g.has_edge(m.image(u), m.image(v)):
                out.append(_edge_msg(u, v, m))
        generic = IndexSet(params.lo, params.hi, params.excluded | exc_params)
        if generic.is_empty():
            continue
        fa, fb = m.maps[r.a_fam], m.maps[r.b_fam]
        if fa.sign == fb.sign:
            s = fa.sign
            diff = s * (r.b_off - r.a_off) + fb.offset - fa.offset
            covered = []
            for r2 in g.rules:
                p2 = g.instance_params(r2)
                if (fa.target, fb.target) == (r2.a_fam, r2.b_fam) and diff == r2.b_off - r2.a_off:
                    k = s * r.a_off + fa.offset - r2.a_off       # j = s*i + k
                    covered.append(p2.affine(s, -s * k))
                if (fa.target, fb.target) == (r2.b_fam, r2.a_fam) and diff == r2.a_off - r2.b_off:
                    k = s * r.a_off + fa.offset - r2.b_off
                    covered.append(p2.affine(s, -s * k))
            left = subtract_all([generic], covered)
            if left:
                i = left[0].sample()
                out.append(_edge_msg((r.a_fam, i + r.a_off), (r.b_fam, i + r.b_off), m))
        else:
            # the index gap of the image varies with i, so only finitely many
            # parameters can land on rule instances; find one that does not
            ok_params = set()
            for r2 in g.rules:
                p2 = g.instance_params(r2)
                for x_fam, x_off, y_fam, y_off in ((r2.a_fam, r2.a_off, r2.b_fam, r2.b_off),
                                                   (r2.b_fam, r2.b_off, r2.a_fam, r2.a_off)):
                    if (fa.target, fb.target) != (x_fam, y_fam):
                        continue
                    # fb(i+b) - fa(i+a) = y_off - x_off, linear in i with slope +-2
                    slope = fb.sign - fa.sign
                    const = fb.sign * r.b_off + fb.offset - fa.sign * r.a_off - fa.offset
                    num = (y_off - x_off) - const
                    if num % slope == 0:
                        i = num // slope
                        if i in generic and fa(i + r.a_off) - x_off in p2:
                            ok_params.add(i)
            bad = subtract_all([generic], [IndexSet.point(i) for i in ok_params])
            if bad:
                i = bad[0].sample()
                out.append(_edge_msg((r.a_fam, i + r.a_off), (r.b_fam, i + r.b_off), m))
    return out


def _edge_msg(u: Vertex, v: Vertex, m: FamilyMap) -> str:
    return (f"edge {vname(u)} ~ {vname(v)} maps to {vname(m.image(u))}, {vname(m.image(v))} "
            f"which is not an edge")


def _image_pieces(g: SchematicGraph, m: FamilyMap) -> dict[str, list[tuple[str, IndexSet]]]:
    out: dict[str, list[tuple[str, IndexSet]]] = {f: [] for f in g.families}
    for fam, a in m.maps.items():
        if fam in g.families:
            out[a.target].append((fam, _affine_part(g, m, fam).affine(a.sign, a.offset)))
    for v, w in m.exceptions.items():
        out[w[0]].append((vname(v), IndexSet.point(w[1])))
    return out


def schematic_check_endo(g: SchematicGraph, m: FamilyMap) -> EndoReport:
    """Decide whether ``m`` is an endomorphism, injective, surjective.

    Raises :class:`SchematicMapError` (listing domain and edge failures)
    when some vertex is sent outside the graph.
    """
    domain_fail = _domain_failures(g, m)
    rule_fail = _rule_failures(g, m) if not any("no image" in f or "unknown" in f
                                                for f in domain_fail) else []
    if domain_fail:
        raise SchematicMapError(domain_fail + rule_fail)

    notes = []
    pieces = _image_pieces(g, m)
    injective = True
    for target, lst in pieces.items():
        for (n1, s1), (n2, s2) in itertools.combinations(lst, 2):
            common = s1.intersect(s2)
            if not common.is_empty():
                injective = False
                notes.append(f"{n1} and {n2} both reach {vname((target, common.sample()))}")
    unreached: list[Vertex] = []
    for fam, f in g.families.items():
        left = subtract_all([f.domain], [s for _, s in pieces[fam]])
        for piece in left:
            idx = piece.elements()[:UNREACHED_CAP] if piece.is_finite() else [piece.sample()]
            unreached.extend((fam, i) for i in idx)
        if left:
            v = (fam, left[0].sample())
            srcs = [src for src, a in m.maps.items() if a.target == fam]
            pre = ", ".join(f"{src} index {a.sign * (v[1] - a.offset)}"
                            for src in srcs for a in [m.maps[src]])
            notes.append(f"{vname(v)} is not in the image" + (f" (preimage {pre} does not exist)"
                                                              if pre else ""))
    return EndoReport(not rule_fail, injective, not unreached, unreached, rule_fail, notes)


def iter_window_vertices(g: SchematicGraph, lo: int, hi: int) -> Iterator[Vertex]:
    for f in g.families:
        for i in g.families[f].domain.window(lo, hi):
            yield (f, i)
