"""Alphabets, words and the shortlex order.

A word is stored as a *code string*: one character per letter, where the
character ``chr(k)`` stands for the k-th declared letter.  Because of that
encoding, Python's own ``(len(code), code)`` tuple comparison *is* the
shortlex order induced by the declaration order, and substring search on
codes is substring search on words.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class AlphabetMismatch(ValueError):
    pass


class WordSyntaxError(ValueError):
    """Raised by :meth:`Alphabet.parse`; ``column`` is 1-based."""

    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column} in {text!r}")
        self.text = text
        self.column = column


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("an alphabet needs at least one letter")
        if len(set(letters)) != len(letters):
            raise ValueError(f"repeated letter in {letters}")
        for name in letters:
            if not _IDENT.match(name):
                raise ValueError(f"bad letter name {name!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_string(cls, text: str) -> Alphabet:
        """``"a b f"`` or ``"abf"`` (the latter only for one-character letters)."""
        parts = text.replace(",", " ").split()
        if len(parts) == 1 and len(parts[0]) > 1:
            parts = list(parts[0])
        return cls(parts)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def index(self, letter: str) -> int:
        return self.letters.index(letter)

    def letter(self, name: str) -> Word:
        return Word(self, chr(self.index(name)))

    def generators(self) -> list[Word]:
        return [Word(self, chr(k)) for k in range(len(self.letters))]

    def word(self, text: str, allow_empty: bool = False) -> Word:
        return Word(self, self.parse(text, allow_empty=allow_empty))

    def parse(self, text: str, allow_empty: bool = False) -> str:
        """Parse word syntax into a code string.

        Letters are juxtaposed (whitespace is ignored) and matched longest
        first; ``^k`` raises the preceding letter or parenthesised group to
        the k-th power, so ``a(ba)^2b^3`` is ``ababab``+``bb``.
        """
        by_length = sorted(self.letters, key=len, reverse=True)
        pos = 0
        stack: list[list[str]] = [[]]
        opened: list[int] = []
        last: str | None = None  # code of the item a following ^k applies to

        while pos < len(text):
            ch = text[pos]
            if ch.isspace():
                pos += 1
                continue
            if ch == "(":
                stack.append([])
                opened.append(pos)
                last = None
                pos += 1
                continue
            if ch == ")":
                if not opened:
                    raise WordSyntaxError("unbalanced ')'", text, pos + 1)
                opened.pop()
                group = "".join(stack.pop())
                stack[-1].append(group)
                last = group
                pos += 1
                continue
            if ch == "^":
                m = re.compile(r"\^\s*(\d+)").match(text, pos)
                if m is None:
                    raise WordSyntaxError("expected exponent after '^'", text, pos + 1)
                if last is None:
                    raise WordSyntaxError("'^' with nothing to raise", text, pos + 1)
                k = int(m.group(1))
                if k < 1:
                    raise WordSyntaxError("exponent must be positive", text, pos + 2)
                stack[-1][-1] = last * k
                last = None
                pos = m.end()
                continue
            for name in by_length:
                if text.startswith(name, pos):
                    code = chr(self.letters.index(name))
                    stack[-1].append(code)
                    last = code
                    pos += len(name)
                    break
            else:
                raise WordSyntaxError(f"unknown letter {ch!r}", text, pos + 1)

        if opened:
            raise WordSyntaxError("unbalanced '('", text, opened[-1] + 1)
        code = "".join(stack[0])
        if not code and not allow_empty:
            raise WordSyntaxError("empty word", text, 1)
        return code

    def format(self, code: str) -> str:
        """Render a code string with caret powers for runs, e.g. ``abab^2ab``."""
        if not code:
            return "ε"
        multi = any(len(name) > 1 for name in self.letters)
        out = []
        for run in re.finditer(r"(.)\1*", code, re.S):
            name = self.letters[ord(run.group(1))]
            n = len(run.group(0))
            out.append(name if n == 1 else f"{name}^{n}")
        return (" " if multi else "").join(out)


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    code: str

    def __post_init__(self):
        n = len(self.alphabet.letters)
        if any(ord(c) >= n for c in self.code):
            raise ValueError("letter index out of range for alphabet")

    def __len__(self) -> int:
        return len(self.code)

    def __str__(self) -> str:
        return self.alphabet.format(self.code)

    def __repr__(self) -> str:
        return f"Word({self})"

    def __add__(self, other: Word) -> Word:
        return concat(self, other)

    @property
    def letters(self) -> tuple[str, ...]:
        return tuple(self.alphabet.letters[ord(c)] for c in self.code)

    def is_empty(self) -> bool:
        return not self.code

    def sort_key(self) -> tuple[int, str]:
        return (len(self.code), self.code)


@dataclass(frozen=True)
class ShortLexOrder:
    alphabet: Alphabet

    def key(self, word: Word) -> tuple[int, str]:
        if word.alphabet != self.alphabet:
            raise AlphabetMismatch(f"{word} is not over {self.alphabet.letters}")
        return word.sort_key()

    def less(self, u: Word, v: Word) -> bool:
        return self.key(u) < self.key(v)


def compare(u: Word, v: Word, order: ShortLexOrder) -> Cmp:
    ku, kv = order.key(u), order.key(v)
    if ku < kv:
        return Cmp.LESS
    if ku > kv:
        return Cmp.GREATER
    return Cmp.EQUAL


def concat(u: Word, v: Word) -> Word:
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch("cannot concatenate words over different alphabets")
    return Word(u.alphabet, u.code + v.code)


def shortlex_key(code: str) -> tuple[int, str]:
    return (len(code), code)


def all_codes(size: int, max_length: int, min_length: int = 1) -> Iterator[str]:
    """Every code string over ``size`` letters, in shortlex order."""
    letters = [chr(k) for k in range(size)]
    level = [""]
    for n in range(1, max_length + 1):
        level = [w + c for w in level for c in letters]
        if n >= min_length:
            yield from level
