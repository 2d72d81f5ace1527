"""Element literal syntax.

    lit   := frac | set | tuple | chang | quad | map
    frac  := INT [ "/" NAT ]
    set   := "{" [ NAT { "," NAT } ] "}"
    tuple := "(" lit { "," lit } ")"
    chang := "c(" INT "," INT ")"
    quad  := "q(" INT "," INT ")"          m + n*alpha, alpha = sqrt(2) - 1
    map   := "[" [ NAT ":" lit { "," NAT ":" lit } ] "]"

Parsing yields a small literal tree; each algebra converts it into its own
element payload (see ``EMVAlgebra.from_literal``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import ParseError


@dataclass(frozen=True)
class Frac:
    value: Fraction

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class SetLit:
    members: frozenset

    def __str__(self):
        return "{" + ",".join(map(str, sorted(self.members))) + "}"


@dataclass(frozen=True)
class TupleLit:
    items: Tuple

    def __str__(self):
        return "(" + ",".join(map(str, self.items)) + ")"


@dataclass(frozen=True)
class ChangLit:
    hi: int
    lo: int

    def __str__(self):
        return f"c({self.hi},{self.lo})"


@dataclass(frozen=True)
class QuadLit:
    m: int
    n: int

    def __str__(self):
        return f"q({self.m},{self.n})"


@dataclass(frozen=True)
class MapLit:
    entries: Tuple  # ((index, literal), ...)

    def __str__(self):
        return "[" + ",".join(f"{i}:{v}" for i, v in self.entries) + "]"


class Scanner:
    """Character cursor with offset-carrying errors; shared with the descriptor parser."""

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token):
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token):
        if not self.accept(token):
            found = self.peek() or "end of input"
            self.error(f"expected {token!r}, found {found!r}")

    def integer(self, signed=True):
        self.skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.error("expected an integer", start)
        return int(self.text[start:self.pos])

    def word(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos], start

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            self.error(f"unexpected trailing input {self.text[self.pos]!r}")


def _literal(s: Scanner):
    c = s.peek()
    if c == "{":
        s.expect("{")
        members = []
        if not s.accept("}"):
            members.append(s.integer(signed=False))
            while s.accept(","):
                members.append(s.integer(signed=False))
            s.expect("}")
        return SetLit(frozenset(members))
    if c == "(":
        s.expect("(")
        items = [_literal(s)]
        while s.accept(","):
            items.append(_literal(s))
        s.expect(")")
        return TupleLit(tuple(items))
    if c == "[":
        s.expect("[")
        entries = []
        if not s.accept("]"):
            while True:
                at = s.pos
                i = s.integer(signed=False)
                s.expect(":")
                if any(i == j for j, _ in entries):
                    s.error(f"duplicate index {i}", at)
                entries.append((i, _literal(s)))
                if not s.accept(","):
                    break
            s.expect("]")
        return MapLit(tuple(sorted(entries, key=lambda e: e[0])))
    if c in ("c", "q"):
        s.pos += 1
        s.expect("(")
        first = s.integer()
        s.expect(",")
        second = s.integer()
        s.expect(")")
        return ChangLit(first, second) if c == "c" else QuadLit(first, second)
    if c.isdigit() or c in "+-":
        num = s.integer()
        den = 1
        if s.accept("/"):
            at = s.pos
            den = s.integer(signed=False)
            if den == 0:
                s.error("zero denominator", at)
        return Frac(Fraction(num, den))
    s.error(f"unexpected {c or 'end of input'!r} in element literal")


def parse_literal(text: str):
    """Parse one element literal; raises ParseError with a byte offset."""
    s = Scanner(text)
    lit = _literal(s)
    s.end()
    return lit


def parse_literal_prefix(s: Scanner):
    return _literal(s)
