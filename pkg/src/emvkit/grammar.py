"""Algebra descriptor syntax.

    algebra := "chain(" NAT ")" | "bool(" NAT ")" | "dyadic" | "rational"
             | "padic(" NAT ")" | "quad" | "chang" | "finsubsets"
             | "product(" algebra { "," algebra } ")" | "sum(" algebra ")"

``str(M)`` prints the canonical form, and ``parse_descriptor(str(M)) == M``.
"""

from __future__ import annotations

from .algebra import Bool, Chain, Chang, EMVAlgebra, FinSubsets, GammaInterval, Product, Sum
from .arith import Dyadics, PAdicRationals, QuadRing, Rationals
from .literals import Scanner

ATOMS = {
    "dyadic": lambda: GammaInterval(Dyadics()),
    "rational": lambda: GammaInterval(Rationals()),
    "quad": lambda: GammaInterval(QuadRing()),
    "chang": Chang,
    "finsubsets": FinSubsets,
}

# name -> (constructor, least admissible argument)
INDEXED = {
    "chain": (Chain, 1),
    "bool": (Bool, 1),
    "padic": (lambda p: GammaInterval(PAdicRationals(p)), 2),
}


def _algebra(s: Scanner) -> EMVAlgebra:
    name, start = s.word()
    if not name:
        found = s.peek() or "end of input"
        s.error(f"expected an algebra name, found {found!r}", start)
    if name in ATOMS:
        return ATOMS[name]()
    if name in INDEXED:
        make, least = INDEXED[name]
        s.expect("(")
        s.skip()
        at = s.pos
        n = s.integer(signed=False)
        if n < least:
            s.error(f"{name}(n) needs n >= {least}", at)
        s.expect(")")
        return make(n)
    if name == "product":
        s.expect("(")
        parts = [_algebra(s)]
        while s.accept(","):
            parts.append(_algebra(s))
        s.expect(")")
        return Product(tuple(parts))
    if name == "sum":
        s.expect("(")
        s.skip()
        at = s.pos
        base = _algebra(s)
        if not base.has_top:
            s.error(f"sum(...) needs a base with a top element, got {base}", at)
        s.expect(")")
        return Sum(base)
    s.error(f"unknown algebra {name!r}", start)


def parse_descriptor(text: str) -> EMVAlgebra:
    """Parse a descriptor; errors are ParseError with a byte offset."""
    s = Scanner(text)
    M = _algebra(s)
    s.end()
    return M


def format_descriptor(M: EMVAlgebra) -> str:
    return str(M)
