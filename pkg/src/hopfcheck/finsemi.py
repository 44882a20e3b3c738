"""Finite semigroups given by multiplication tables.

Covers Rees index, relative Green's relations and Green index, the
strong-semilattice (Clifford) gluing of two groups, and the power
stabilizer of an injective endomorphism on a finite-Rees-index
subsemigroup.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


class NotAssociative(ValueError):
    pass


class NotClosed(ValueError):
    pass


@dataclass(frozen=True)
class FiniteSemigroup:
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __init__(self, elements: Iterable[str], table: Sequence[Sequence[int | str]],
                 check: bool = True):
        elements = tuple(str(e) for e in elements)
        n = len(elements)
        if n == 0:
            raise ValueError("a semigroup needs at least one element")
        if len(set(elements)) != n:
            raise ValueError("element names must be distinct")
        index = {e: i for i, e in enumerate(elements)}
        rows = []
        if len(table) != n:
            raise ValueError(f"table has {len(table)} rows, expected {n}")
        for i, row in enumerate(table):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            cells = []
            for x in row:
                if isinstance(x, str):
                    if x not in index:
                        raise ValueError(f"unknown element {x!r} in row {i}")
                    x = index[x]
                if not 0 <= x < n:
                    raise ValueError(f"entry {x} out of range in row {i}")
                cells.append(int(x))
            rows.append(tuple(cells))
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "table", tuple(rows))
        if check:
            bad = self.associativity_failure()
            if bad is not None:
                x, y, z = (elements[k] for k in bad)
                raise NotAssociative(f"({x}{y}){z} != {x}({y}{z})")

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteSemigroup({list(self.elements)})"

    def associativity_failure(self) -> tuple[int, int, int] | None:
        t = self.table
        r = range(len(t))
        for x in r:
            tx = t[x]
            for y in r:
                xy = tx[y]
                ty = t[y]
                for z in r:
                    if t[xy][z] != tx[ty[z]]:
                        return (x, y, z)
        return None

    def index(self, name: str) -> int:
        return self.elements.index(name)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def names(self, idxs: Iterable[int]) -> list[str]:
        return [self.elements[i] for i in sorted(idxs)]

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        """The subsemigroup generated by ``gens``."""
        gens = list(set(gens))
        seen = set(gens)
        queue = deque(gens)
        while queue:
            x = queue.popleft()
            for g in gens:
                for p in (self.table[x][g], self.table[g][x]):
                    if p not in seen:
                        seen.add(p)
                        queue.append(p)
        return frozenset(seen)

    def identity(self) -> int | None:
        r = range(len(self))
        for e in r:
            if all(self.table[e][x] == x == self.table[x][e] for x in r):
                return e
        return None

    def is_group(self) -> bool:
        # associative + every row and column a permutation
        n = len(self)
        full = set(range(n))
        return all(set(row) == full for row in self.table) and all(
            {self.table[i][j] for i in range(n)} == full for j in range(n))

    def subsemigroup(self, members: Iterable[int | str]) -> SubSemigroup:
        return SubSemigroup(self, frozenset(self.index(m) if isinstance(m, str) else m
                                            for m in members))

    def whole(self) -> SubSemigroup:
        return SubSemigroup(self, frozenset(range(len(self))))

    def subsemigroups(self) -> list[SubSemigroup]:
        """Every nonempty closed subset (exponential; small tables only)."""
        out = []
        n = len(self)
        for mask in range(1, 1 << n):
            members = frozenset(i for i in range(n) if mask >> i & 1)
            if all(self.table[x][y] in members for x in members for y in members):
                out.append(SubSemigroup(self, members))
        return out

    def to_json(self) -> dict:
        return {"elements": list(self.elements),
                "table": [list(row) for row in self.table]}


@dataclass(frozen=True)
class SubSemigroup:
    parent: FiniteSemigroup
    members: frozenset[int]

    def __post_init__(self):
        if not self.members:
            raise ValueError("a subsemigroup must be nonempty")
        t = self.parent.table
        for x in self.members:
            for y in self.members:
                if t[x][y] not in self.members:
                    p = self.parent.elements
                    raise NotClosed(f"{p[x]}{p[y]} = {p[t[x][y]]} leaves the subset")

    def complement(self) -> frozenset[int]:
        return frozenset(range(len(self.parent))) - self.members

    def names(self) -> list[str]:
        return self.parent.names(self.members)


def rees_index(t: SubSemigroup) -> int:
    return len(t.parent) - len(t.members) + 1


@dataclass
class RelativeGreenClasses:
    kind: str
    classes: list[frozenset[int]]
    parent: FiniteSemigroup = field(repr=False)

    def class_of(self, x: int) -> frozenset[int]:
        return next(c for c in self.classes if x in c)

    def named(self) -> list[list[str]]:
        return [self.parent.names(c) for c in self.classes]


def _partition(keys: Sequence) -> list[frozenset[int]]:
    groups: dict = {}
    for i, k in enumerate(keys):
        groups.setdefault(k, []).append(i)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def relative_green(t: SubSemigroup, kind: str) -> RelativeGreenClasses:
    """Classes of R^T (xT^1 = yT^1), L^T (T^1x = T^1y) or H^T = R^T & L^T."""
    kind = kind.upper().split("^")[0]
    s = t.parent
    tab = s.table
    right = [frozenset({x} | {tab[x][u] for u in t.members}) for x in range(len(s))]
    left = [frozenset({x} | {tab[u][x] for u in t.members}) for x in range(len(s))]
    if kind == "R":
        keys = right
    elif kind == "L":
        keys = left
    elif kind == "H":
        keys = list(zip(right, left))
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    return RelativeGreenClasses(kind, _partition(keys), s)


def green_index(t: SubSemigroup) -> int:
    outside = t.complement()
    h = relative_green(t, "H")
    return sum(1 for c in h.classes if c <= outside) + 1


def classical_green(s: FiniteSemigroup, kind: str) -> list[frozenset[int]]:
    """Green's relations via mutual reachability in the Cayley digraphs.

    ``x R y`` iff each is reachable from the other by right multiplication
    (reflexively); independent of the ideal-equality definition used by
    :func:`relative_green`.
    """
    n = len(s)

    def reach(step) -> list[set[int]]:
        out = []
        for x in range(n):
            seen = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for z in range(n):
                    w = step(y, z)
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(seen)
        return out

    def classes(r) -> list[frozenset[int]]:
        return _partition([frozenset(y for y in r[x] if x in r[y]) for x in range(n)])

    if kind == "R":
        return classes(reach(lambda y, z: s.table[y][z]))
    if kind == "L":
        return classes(reach(lambda y, z: s.table[z][y]))
    if kind == "H":
        r = classes(reach(lambda y, z: s.table[y][z]))
        l = classes(reach(lambda y, z: s.table[z][y]))
        return sorted({a & b for a in r for b in l if a & b}, key=min)
    raise ValueError(kind)


# ---------------------------------------------------------------- builders

def cyclic_group(n: int, prefix: str = "") -> FiniteSemigroup:
    names = [f"{prefix}{i}" for i in range(n)]
    return FiniteSemigroup(names, [[(i + j) % n for j in range(n)] for i in range(n)])


def left_zero(names: Sequence[str]) -> FiniteSemigroup:
    return FiniteSemigroup(names, [[i] * len(names) for i in range(len(names))])


def right_zero(names: Sequence[str]) -> FiniteSemigroup:
    return FiniteSemigroup(names, [list(range(len(names)))] * len(names))


def null_semigroup(names: Sequence[str]) -> FiniteSemigroup:
    """All products equal the last element."""
    z = len(names) - 1
    return FiniteSemigroup(names, [[z] * len(names) for _ in names])


def monogenic(index: int, period: int) -> FiniteSemigroup:
    """``<a | a^(index+period) = a^index>``, elements a^1 .. a^(index+period-1)."""
    size = index + period - 1

    def power(k):
        while k > size:
            k -= period
        return k

    names = [f"a{k}" for k in range(1, size + 1)]
    return FiniteSemigroup(names, [[power(i + j) - 1 for j in range(1, size + 1)]
                                   for i in range(1, size + 1)])


def transformation_semigroup(gens: Sequence[Sequence[int]]) -> FiniteSemigroup:
    """Semigroup generated by maps on ``range(d)`` under left-to-right composition."""
    gens = [tuple(g) for g in gens]
    elems = list(dict.fromkeys(gens))
    seen = set(elems)
    i = 0
    while i < len(elems):
        f = elems[i]
        for g in gens:
            h = tuple(g[f[k]] for k in range(len(f)))  # first f, then g
            if h not in seen:
                seen.add(h)
                elems.append(h)
        i += 1
    index = {f: k for k, f in enumerate(elems)}
    table = [[index[tuple(g[f[k]] for k in range(len(f)))] for g in elems] for f in elems]
    return FiniteSemigroup(["t" + "".join(map(str, f)) for f in elems], table)


def direct_product(a: FiniteSemigroup, b: FiniteSemigroup) -> FiniteSemigroup:
    pairs = list(itertools.product(range(len(a)), range(len(b))))
    index = {p: k for k, p in enumerate(pairs)}
    table = [[index[(a.table[x][u], b.table[y][v])] for (u, v) in pairs] for (x, y) in pairs]
    return FiniteSemigroup([f"({a.elements[x]},{b.elements[y]})" for x, y in pairs], table)


def check_homomorphism(src: FiniteSemigroup, dst: FiniteSemigroup,
                       images: Sequence[int]) -> tuple[int, int] | None:
    """First pair (x, y) with (xy)h != (xh)(yh), or None."""
    for x in range(len(src)):
        for y in range(len(src)):
            if images[src.table[x][y]] != dst.table[images[x]][images[y]]:
                return (x, y)
    return None


def clifford_of_two_groups(top: FiniteSemigroup, bottom: FiniteSemigroup,
                           hom: Sequence[int] | Mapping[str, str]) -> FiniteSemigroup:
    """Strong semilattice of groups over the chain top > bottom.

    Elements are the top elements followed by the bottom ones (bottom names
    are primed when they clash).  A top element ``a`` acts on a bottom
    element ``b`` through the connecting homomorphism: ``ab = h(a)b`` and
    ``ba = b h(a)``.
    """
    for g, label in ((top, "top"), (bottom, "bottom")):
        if not g.is_group():
            raise ValueError(f"{label} is not a group")
    if isinstance(hom, Mapping):
        hom = [bottom.index(hom[x]) for x in top.elements]
    hom = list(hom)
    if len(hom) != len(top) or not all(0 <= h < len(bottom) for h in hom):
        raise ValueError("hom must map every top element into the bottom group")
    bad = check_homomorphism(top, bottom, hom)
    if bad is not None:
        x, y = (top.elements[k] for k in bad)
        raise ValueError(f"hom is not a homomorphism at ({x}, {y})")

    m = len(top)
    low_names = list(bottom.elements)
    if set(low_names) & set(top.elements):
        low_names = [f"{b}'" for b in low_names]
    n = m + len(bottom)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i < m and j < m:
                table[i][j] = top.table[i][j]
            else:
                x = hom[i] if i < m else i - m
                y = hom[j] if j < m else j - m
                table[i][j] = m + bottom.table[x][y]
    return FiniteSemigroup(list(top.elements) + low_names, table)


# --------------------------------------------------------- power stabilizer

@dataclass
class StabilizerCertificate:
    per_generator: dict[str, tuple[int, int]]  # generator -> (k_t, m_t)
    k: int
    m: int
    power: int
    image_in_t: bool            # T phi^power is contained in T
    bijective_on_t: bool        # phi^power restricted to T permutes T
    bijective_on_complement: bool
    first_power_image: list[str]  # T phi, for reporting
    stabilized_image: list[str]   # T phi^power


def _orbit(phi: Sequence[int], t: int) -> tuple[list[int], int]:
    """Walk t, t phi, t phi^2, ... until a repeat; return (orbit, tail length)."""
    orbit = [t]
    seen = {t: 0}
    while True:
        nxt = phi[orbit[-1]]
        if nxt in seen:
            return orbit, seen[nxt]
        seen[nxt] = len(orbit)
        orbit.append(nxt)


def _power_index(orbit: list[int], tail: int, i: int) -> int:
    if i < len(orbit):
        return orbit[i]
    cycle = len(orbit) - tail
    return orbit[tail + (i - tail) % cycle]


def stabilizing_exponents(phi: Sequence[int], t: int, members: frozenset[int]) -> tuple[int, int]:
    """Least ``m`` then least ``k`` with t phi^(l*m) in T for every l >= k.

    The orbit is eventually periodic, so for each candidate m membership of
    t phi^(l*m) is periodic in l past the tail; checking one full period
    beyond the last possible failure decides it.
    """
    orbit, tail = _orbit(phi, t)
    cycle = len(orbit) - tail
    # past the tail only gcd(m, cycle) matters, so m <= cycle suffices
    for m in range(1, cycle + 1):
        start = -(-tail // m) if tail else 0  # first l with l*m in the cycle
        horizon = start + cycle + 1
        if any(_power_index(orbit, tail, l * m) not in members
               for l in range(max(start, 1), horizon + 1)):
            continue
        k = 1
        for l in range(1, max(start, 1)):
            if _power_index(orbit, tail, l * m) not in members:
                k = l + 1
        return k, m
    raise ValueError(f"the orbit of element {t} never settles into T")


def compose_power(phi: Sequence[int], e: int) -> list[int]:
    out = list(range(len(phi)))
    for _ in range(e):
        out = [phi[x] for x in out]
    return out


def power_stabilizer(s: FiniteSemigroup, t: SubSemigroup, phi: Sequence[int] | Mapping[str, str],
                     generators: Iterable[int | str] | None = None) -> StabilizerCertificate:
    """Exponent ``k*m`` with ``T phi^(km)`` inside T, built generator by generator.

    ``k`` is the largest and ``m`` the lcm of the per-generator exponents;
    the resulting containment is then re-checked on every element of T.
    """
    if t.parent != s:
        raise ValueError("t is not a subsemigroup of s")
    if isinstance(phi, Mapping):
        phi = [s.index(phi[x]) for x in s.elements]
    phi = list(phi)
    if len(phi) != len(s):
        raise ValueError("phi must be total")
    if len(set(phi)) != len(phi):
        raise ValueError("phi is not injective")
    bad = check_homomorphism(s, s, phi)
    if bad is not None:
        raise ValueError(f"phi is not an endomorphism at {s.names(bad)}")
    if generators is None:
        generators = generating_set(t)
    gens = sorted(s.index(g) if isinstance(g, str) else g for g in generators)
    if not set(gens) <= t.members or s.closure(gens) != t.members:
        raise ValueError("the given generators do not generate t")

    per = {s.elements[g]: stabilizing_exponents(phi, g, t.members) for g in gens}
    k = max(kt for kt, _ in per.values())
    m = math.lcm(*(mt for _, mt in per.values()))
    power = k * m
    phik = compose_power(phi, power)
    image = {phik[x] for x in t.members}
    comp = t.complement()
    return StabilizerCertificate(
        per_generator=per, k=k, m=m, power=power,
        image_in_t=image <= t.members,
        bijective_on_t=image == t.members,
        bijective_on_complement={phik[x] for x in comp} == comp,
        first_power_image=s.names({phi[x] for x in t.members}),
        stabilized_image=s.names(image),
    )


def generating_set(t: SubSemigroup) -> list[int]:
    """A small generating set: greedily add the least element not yet generated."""
    s = t.parent
    gens: list[int] = []
    got: frozenset[int] = frozenset()
    for x in sorted(t.members):
        if x not in got:
            gens.append(x)
            got = s.closure(gens)
    # drop redundant generators
    for g in list(gens):
        rest = [h for h in gens if h != g]
        if rest and s.closure(rest) == t.members:
            gens = rest
    return gens
