"""Reading the text and JSON input formats, with positioned errors.

Presentation files::

    # comment
    letters: a b
    rule: a b a b^2 a b -> b
    relation: y^2 = x^2

Tables, graphs and schematic graphs are JSON objects distinguished by
their keys (``table``, ``vertices``, ``families``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import Alphabet, Word, WordSyntaxError
from .finsemi import FiniteSemigroup
from .fpsemi import FpSemigroup
from .graphs import GraphError, SimpleGraph
from .rewriting import OrientationError, RewritingSystem, Rule
from .schematic import SchematicError, SchematicGraph


class InputError(ValueError):
    """An input problem located at ``path:line:column`` near ``token``."""

    def __init__(self, path: str, line: int, column: int, token: str, message: str):
        where = f"{path}:{line}:{column}"
        near = f" near {token!r}" if token else ""
        super().__init__(f"{where}: {message}{near}")
        self.path, self.line, self.column, self.token = path, line, column, token


@dataclass
class Presentation:
    alphabet: Alphabet
    rules: list[tuple[Word, Word, int]]       # (lhs, rhs, line)
    relations: list[tuple[Word, Word, int]]   # (u, v, line)
    path: str = "<string>"

    def all_pairs(self) -> list[tuple[Word, Word]]:
        return [(u, v) for u, v, _ in self.rules + self.relations]

    def reorder(self, order: str | None) -> Presentation:
        """Same presentation under a different letter order."""
        if not order:
            return self
        new = Alphabet.from_string(order)
        if sorted(new.letters) != sorted(self.alphabet.letters):
            raise InputError(self.path, 0, 0, order,
                             f"--order must permute the letters {' '.join(self.alphabet)}")

        def conv(w: Word) -> Word:
            return Word(new, "".join(chr(new.index(x)) for x in w.letters))
        return Presentation(new, [(conv(u), conv(v), ln) for u, v, ln in self.rules],
                            [(conv(u), conv(v), ln) for u, v, ln in self.relations], self.path)

    def system(self) -> RewritingSystem:
        """Rules as written plus relations oriented by shortlex."""
        rules = []
        for lhs, rhs, ln in self.rules:
            if (len(rhs), rhs.code) >= (len(lhs), lhs.code):
                raise InputError(self.path, ln, 1, str(lhs),
                                 f"rule {lhs} -> {rhs} does not decrease shortlex under "
                                 f"letter order {' < '.join(self.alphabet)}")
            rules.append(Rule(lhs, rhs))
        try:
            extra = RewritingSystem.from_relations(self.alphabet, [(u, v) for u, v, _ in self.relations])
        except OrientationError as exc:
            raise InputError(self.path, 0, 0, "", str(exc)) from None
        seen = {(r.lhs.code, r.rhs.code) for r in rules}
        rules += [r for r in extra.rules if (r.lhs.code, r.rhs.code) not in seen]
        return RewritingSystem(self.alphabet, rules)

    def semigroup(self, fuel: int = 50) -> FpSemigroup:
        """The presented semigroup, completing the system only if needed."""
        rs = self.system()
        ok, _ = rs.is_confluent()
        pairs = self.all_pairs()
        if ok:
            return FpSemigroup(self.alphabet, pairs, engine=rs, name=self.path)
        return FpSemigroup(self.alphabet, pairs, engine=rs.complete(fuel), name=self.path)


def parse_presentation(text: str, path: str = "<string>") -> Presentation:
    alphabet = None
    rules, relations = [], []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key, sep, body = line.partition(":")
        key = key.strip()
        if not sep:
            raise InputError(path, ln, 1, line.strip(), "expected 'letters:', 'rule:' or 'relation:'")
        start = len(key) + len(line) - len(line.lstrip()) + 2
        if key == "letters":
            if alphabet is not None:
                raise InputError(path, ln, 1, key, "letters declared twice")
            try:
                alphabet = Alphabet.from_string(body)
            except ValueError as exc:
                raise InputError(path, ln, start, body.strip(), str(exc)) from None
            continue
        if key not in ("rule", "relation"):
            raise InputError(path, ln, 1, key, "unknown directive")
        if alphabet is None:
            raise InputError(path, ln, 1, key, "'letters:' must come first")
        arrow = "->" if key == "rule" else "="
        if body.count(arrow) != 1:
            raise InputError(path, ln, start, body.strip(), f"expected exactly one '{arrow}'")
        left, right = body.split(arrow)
        col_right = line.index(arrow, start - 1) + len(arrow) + 1
        u = _word(alphabet, left, path, ln, start)
        v = _word(alphabet, right, path, ln, col_right)
        (rules if key == "rule" else relations).append((u, v, ln))
    if alphabet is None:
        raise InputError(path, 1, 1, "", "no 'letters:' line")
    return Presentation(alphabet, rules, relations, path)


def _word(alphabet: Alphabet, text: str, path: str, ln: int, col: int) -> Word:
    try:
        return alphabet.word(text)
    except WordSyntaxError as exc:
        bad = exc.text[exc.column - 1:].split()[0] if exc.text[exc.column - 1:].strip() else ""
        raise InputError(path, ln, col + exc.column - 1, bad, str(exc).split(" at column")[0]) from None


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(str(path), 0, 0, "", exc.strerror or str(exc)) from None


def load_presentation(path: str | Path) -> Presentation:
    return parse_presentation(_read(path), str(path))


def _json(text: str, path: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        token = text[exc.pos:exc.pos + 10].split("\n")[0]
        raise InputError(path, exc.lineno, exc.colno, token, exc.msg) from None
    if not isinstance(data, dict):
        raise InputError(path, 1, 1, "", "expected a JSON object")
    return data


def _locate(text: str, needle: str) -> tuple[int, int]:
    """Line and column of the first occurrence of ``needle`` (1, 1 if absent)."""
    idx = text.find(needle)
    if idx < 0:
        return 1, 1
    line = text.count("\n", 0, idx) + 1
    return line, idx - (text.rfind("\n", 0, idx) + 1) + 1


def parse_table(text: str, path: str = "<string>") -> FiniteSemigroup:
    data = _json(text, path)
    for key in ("elements", "table"):
        if key not in data:
            raise InputError(path, 1, 1, key, f"missing key {key!r}")
    try:
        return FiniteSemigroup(data["elements"], data["table"])
    except (ValueError, IndexError, TypeError) as exc:
        ln, col = _locate(text, '"table"')
        raise InputError(path, ln, col, "table", str(exc)) from None


def parse_graph(text: str, path: str = "<string>") -> SimpleGraph:
    data = _json(text, path)
    try:
        return SimpleGraph(data["vertices"], data.get("edges", []))
    except KeyError:
        raise InputError(path, 1, 1, "vertices", "missing key 'vertices'") from None
    except GraphError as exc:
        ln, col = _locate(text, '"edges"')
        raise InputError(path, ln, col, "edges", str(exc)) from None


def parse_schematic(text: str, path: str = "<string>", n_start: int = 1) -> SchematicGraph:
    data = _json(text, path)
    try:
        return SchematicGraph.from_json(data, n_start=n_start)
    except (KeyError, SchematicError) as exc:
        token = str(exc).strip("'")
        ln, col = _locate(text, token if token in text else '"rules"')
        raise InputError(path, ln, col, token, f"bad schematic graph: {exc}") from None


FORMATS = ("presentation", "table", "graph", "schematic")


def sniff_format(path: str | Path, text: str | None = None) -> str:
    """Guess the format from the extension, then from the JSON keys."""
    suffix = Path(path).suffix.lower()
    if suffix in (".rs", ".pres", ".txt", ".sgp"):
        return "presentation"
    if text is None:
        text = _read(path)
    if suffix == ".json" or text.lstrip().startswith("{"):
        data = _json(text, str(path))
        for key, fmt in (("table", "table"), ("families", "schematic"), ("vertices", "graph")):
            if key in data:
                return fmt
        raise InputError(str(path), 1, 1, "", "cannot tell table, graph or schematic JSON apart")
    return "presentation"


def load(path: str | Path, fmt: str | None = None, **kw):
    text = _read(path)
    fmt = fmt or sniff_format(path, text)
    p = str(path)
    if fmt == "presentation":
        return parse_presentation(text, p)
    if fmt == "table":
        return parse_table(text, p)
    if fmt == "graph":
        return parse_graph(text, p)
    if fmt == "schematic":
        return parse_schematic(text, p, **kw)
    raise ValueError(f"unknown format {fmt!r}")
