"""String rewriting: reduction, critical pairs, Knuth-Bendix completion.

Every rule is oriented by shortlex (``rhs < lhs``), so each rewriting step
strictly decreases the shortlex rank and every system built here is
Noetherian.  By Newman's lemma local confluence (all critical pairs
resolve) then implies confluence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import Alphabet, AlphabetMismatch, ShortLexOrder, Word, shortlex_key


class OrientationError(ValueError):
    pass


class FuelExhausted(RuntimeError):
    def __init__(self, message: str, partial: RewritingSystem | None = None):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word

    def __str__(self) -> str:
        return f"{self.lhs} -> {self.rhs}"


@dataclass(frozen=True)
class CriticalPair:
    overlap_word: Word
    left_result: Word
    right_result: Word
    resolved: bool
    rules: tuple[int, int]
    kind: str  # "overlap" or "containment"
    offset: int

    def __str__(self) -> str:
        status = "resolved" if self.resolved else "UNRESOLVED"
        return f"{self.overlap_word}: ({self.left_result}, {self.right_result}) {status}"


def orient(u: str, v: str) -> tuple[str, str]:
    """Return ``(bigger, smaller)`` under shortlex."""
    if u == v:
        raise OrientationError("cannot orient a trivial relation")
    return (u, v) if shortlex_key(u) > shortlex_key(v) else (v, u)


def _find_redex(code: str, rules: Sequence[tuple[str, str]], rightmost: bool = False):
    best = None
    for idx, (lhs, _) in enumerate(rules):
        pos = code.rfind(lhs) if rightmost else code.find(lhs)
        if pos == -1:
            continue
        if best is None or (pos > best[0] if rightmost else pos < best[0]):
            best = (pos, idx)
    return best


def reduce_code_once(code: str, rules: Sequence[tuple[str, str]], rightmost: bool = False):
    found = _find_redex(code, rules, rightmost)
    if found is None:
        return None
    pos, idx = found
    lhs, rhs = rules[idx]
    return code[:pos] + rhs + code[pos + len(lhs):]


def normal_form_code(code: str, rules: Sequence[tuple[str, str]], rightmost: bool = False,
                     fuel: int = 1_000_000) -> str:
    for _ in range(fuel):
        nxt = reduce_code_once(code, rules, rightmost)
        if nxt is None:
            return code
        code = nxt
    raise FuelExhausted(f"no normal form after {fuel} steps")


def _critical_pairs_code(rules: Sequence[tuple[str, str]]):
    """Yield ``(word, left, right, (i, j), kind, offset)`` for every ambiguity.

    ``left`` rewrites with rule ``i`` at position 0, ``right`` with rule
    ``j`` at ``offset``.
    """
    for i, (l1, r1) in enumerate(rules):
        for j, (l2, r2) in enumerate(rules):
            # proper overlaps: a suffix of l1 is a prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    off = len(l1) - k
                    yield (l1 + l2[k:], r1 + l2[k:], l1[:off] + r2, (i, j), "overlap", off)
            # containment: l2 occurs inside l1
            if i != j and len(l2) <= len(l1):
                start = l1.find(l2)
                while start != -1:
                    yield (l1, r1, l1[:start] + r2 + l1[start + len(l2):], (i, j),
                           "containment", start)
                    start = l1.find(l2, start + 1)


@dataclass(frozen=True)
class RewritingSystem:
    alphabet: Alphabet
    rules: tuple[Rule, ...]
    order: ShortLexOrder = field(init=False)
    _codes: tuple[tuple[str, str], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, alphabet: Alphabet, rules: Iterable[Rule | tuple[Word, Word]]):
        rules = tuple(r if isinstance(r, Rule) else Rule(*r) for r in rules)
        codes = []
        for rule in rules:
            for side in (rule.lhs, rule.rhs):
                if side.alphabet != alphabet:
                    raise AlphabetMismatch(f"rule {rule} is not over {alphabet.letters}")
            if not rule.lhs.code:
                raise OrientationError("empty left-hand side")
            if shortlex_key(rule.rhs.code) >= shortlex_key(rule.lhs.code):
                raise OrientationError(f"rule {rule} does not decrease shortlex")
            codes.append((rule.lhs.code, rule.rhs.code))
        if len(set(codes)) != len(codes):
            raise ValueError("duplicate rules")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "order", ShortLexOrder(alphabet))
        object.__setattr__(self, "_codes", tuple(codes))

    @classmethod
    def from_codes(cls, alphabet: Alphabet, codes: Iterable[tuple[str, str]]) -> RewritingSystem:
        return cls(alphabet, [Rule(Word(alphabet, l), Word(alphabet, r)) for l, r in codes])

    @classmethod
    def from_relations(cls, alphabet: Alphabet, relations: Iterable[tuple[Word, Word]]) -> RewritingSystem:
        """Orient each relation by shortlex; trivial relations are rejected."""
        codes = []
        for u, v in relations:
            if u.code == v.code:
                raise OrientationError(f"relation {u} = {v} has identical sides")
            pair = orient(u.code, v.code)
            if pair not in codes:
                codes.append(pair)
        return cls.from_codes(alphabet, codes)

    @property
    def codes(self) -> tuple[tuple[str, str], ...]:
        return self._codes

    def __len__(self) -> int:
        return len(self.rules)

    def __str__(self) -> str:
        return "{" + ", ".join(str(r) for r in self.rules) + "}"

    def _check(self, w: Word) -> None:
        if w.alphabet != self.alphabet:
            raise AlphabetMismatch(f"{w!r} is not over {self.alphabet.letters}")

    def rule_set(self) -> frozenset[tuple[str, str]]:
        """Rules as printable ``(lhs, rhs)`` strings, for order-free comparison."""
        fmt = self.alphabet.format
        return frozenset((fmt(l), fmt(r)) for l, r in self._codes)

    def reduce_once(self, w: Word) -> Word | None:
        """One step at the leftmost redex (lowest rule index on ties); None if irreducible."""
        self._check(w)
        nxt = reduce_code_once(w.code, self._codes)
        return None if nxt is None else Word(self.alphabet, nxt)

    def normal_form(self, w: Word, rightmost: bool = False, fuel: int = 1_000_000) -> Word:
        self._check(w)
        return Word(self.alphabet, normal_form_code(w.code, self._codes, rightmost, fuel))

    def nf(self, code: str) -> str:
        return normal_form_code(code, self._codes)

    def is_irreducible(self, w: Word | str) -> bool:
        code = w if isinstance(w, str) else w.code
        return all(lhs not in code for lhs, _ in self._codes)

    def critical_pairs(self) -> list[CriticalPair]:
        out = []
        a = self.alphabet
        for word, left, right, rules, kind, off in _critical_pairs_code(self._codes):
            resolved = self.nf(left) == self.nf(right)
            out.append(CriticalPair(Word(a, word), Word(a, left), Word(a, right),
                                    resolved, rules, kind, off))
        return out

    def is_confluent(self) -> tuple[bool, list[CriticalPair]]:
        bad = [cp for cp in self.critical_pairs() if not cp.resolved]
        return (not bad, bad)

    def complete(self, fuel: int = 20) -> RewritingSystem:
        return complete(self, fuel)


def critical_pairs(rs: RewritingSystem) -> list[CriticalPair]:
    return rs.critical_pairs()


def is_confluent(rs: RewritingSystem) -> tuple[bool, list[CriticalPair]]:
    return rs.is_confluent()


def _interreduce(rules: list[tuple[str, str]]) -> list[tuple[str, str]]:
    """Drop rules whose lhs is reducible by another rule, re-adding the
    equation they carried, and bring every rhs to normal form.

    The equality generated by the rule set is unchanged.
    """
    rules = list(rules)
    changed = True
    while changed:
        changed = False
        for idx, (lhs, rhs) in enumerate(rules):
            others = rules[:idx] + rules[idx + 1:]
            if any(l in lhs for l, _ in others):
                del rules[idx]
                a = normal_form_code(lhs, others)
                b = normal_form_code(rhs, others)
                if a != b:
                    new = orient(a, b)
                    if new not in rules:
                        rules.append(new)
                changed = True
                break
            nrhs = normal_form_code(rhs, rules)
            if nrhs != rhs:
                rules[idx] = (lhs, nrhs)
                changed = True
                break
    return rules


def complete(rs: RewritingSystem, fuel: int = 20) -> RewritingSystem:
    """Knuth-Bendix completion under the system's shortlex order.

    Each round inter-reduces the rules, then resolves the unresolved
    critical pair whose overlap word is shortlex-least by adding the
    oriented normal forms of its two sides.  ``fuel`` bounds the number of
    rules added this way; :class:`FuelExhausted` carries the partial system.
    """
    rules = _interreduce(list(rs.codes))
    added = 0
    while True:
        pending = []
        for word, left, right, *_ in _critical_pairs_code(rules):
            a, b = normal_form_code(left, rules), normal_form_code(right, rules)
            if a != b:
                pending.append((shortlex_key(word), orient(a, b)))
        if not pending:
            break
        if added >= fuel:
            raise FuelExhausted(f"completion not finished after adding {fuel} rules",
                                RewritingSystem.from_codes(rs.alphabet, rules))
        pending.sort()
        rules.append(pending[0][1])
        added += 1
        rules = _interreduce(rules)

    done = RewritingSystem.from_codes(rs.alphabet, rules)
    for lhs, rhs in rs.codes:
        assert done.nf(lhs) == done.nf(rhs), "completion lost an original relation"
    return done
