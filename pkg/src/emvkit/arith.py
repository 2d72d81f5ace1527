"""Exact unital lattice-ordered groups used as carriers for Gamma(G, u).

Every carrier here is a totally ordered Abelian group with a distinguished
strong unit ``u``.  Payloads are plain Python values:

* ``Integers(n)``: ``int`` (the unit is ``n``, so ``i`` stands for ``i/n``)
* ``Rationals``, ``Dyadics``, ``PAdicRationals(p)``: ``fractions.Fraction``
* ``QuadRing``: :class:`Quad`, ``a + b*sqrt(2)`` with integer ``a, b``
* ``LexZZ``: :class:`Lex`, the lexicographic product ``Z x Z``

No floating point is used anywhere on the exact path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import CarrierMismatch

LT, EQ, GT = -1, 0, 1


class Quad(NamedTuple):
    """``a + b*sqrt(2)``."""

    a: int
    b: int


class Lex(NamedTuple):
    """Element of ``Z x Z`` ordered lexicographically (tuple order)."""

    hi: int
    lo: int


def quad_sign(a, b):
    """Exact sign of ``a + b*sqrt(2)`` for rational ``a, b``.

    sqrt(2) is irrational, so the value is zero only when ``a == b == 0``;
    mixed signs are settled by comparing ``a**2`` with ``2*b**2``.
    """
    if a >= 0 and b >= 0:
        return GT if (a or b) else EQ
    if a <= 0 and b <= 0:
        return LT
    if a > 0:  # b < 0
        return GT if a * a > 2 * b * b else LT
    return GT if 2 * b * b > a * a else LT  # a < 0 < b


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


class Carrier:
    """A totally ordered unital Abelian group with exact operations."""

    unit = None
    zero = None

    def valid(self, x) -> bool:
        raise NotImplementedError

    def check(self, *xs):
        for x in xs:
            if not self.valid(x):
                raise CarrierMismatch(f"{x!r} is not an element of {self}")

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def sub(self, x, y):
        return x - y

    def le(self, x, y) -> bool:
        return x <= y

    def cmp(self, x, y) -> int:
        if x == y:
            return EQ
        return LT if self.le(x, y) else GT

    def times(self, n, x):
        return n * x

    def divide(self, x, n) -> Optional[object]:
        """The unique ``y`` with ``n*y == x``, or None when it does not exist."""
        raise NotImplementedError

    def half(self, x):
        y = self.divide(x, 2)
        # Abelian l-groups have unique extraction of roots.
        assert y is None or self.add(y, y) == x, (x, y)
        return y

    def from_fraction(self, q: Fraction):
        """Embed a rational number of the unit interval, or None."""
        return None

    def halving_obstruction(self):
        """An ``x`` in ``[0, u]`` with ``(x + u)/2`` missing, or None."""
        for x in self.probe_points():
            if self.half(self.add(x, self.unit)) is None:
                return x
        return None

    def probe_points(self):
        return (self.zero, self.unit)

    def describe_half(self, x) -> str:
        """Value of ``(x + u)/2`` in the divisible hull, as text."""
        raise NotImplementedError


@dataclass(frozen=True)
class Integers(Carrier):
    """``Z`` with strong unit ``n``; ``Gamma(Z, n)`` is the (n+1)-element chain."""

    n: int

    def __post_init__(self):
        if not _is_int(self.n) or self.n < 1:
            raise ValueError("Integers(n) needs a positive integer unit")

    @property
    def unit(self):
        return self.n

    zero = 0

    def valid(self, x):
        return _is_int(x)

    def divide(self, x, n):
        return x // n if x % n == 0 else None

    def from_fraction(self, q):
        v = q * self.n
        return int(v) if v.denominator == 1 else None

    def halving_obstruction(self):
        # (x + n)/2 is an integer iff x and n share parity.
        return 1 if self.n % 2 == 0 else 0

    def describe_half(self, x):
        return str(Fraction(x + self.n, 2 * self.n))

    def __str__(self):
        return f"Integers({self.n})"


class _RationalLike(Carrier):
    unit = Fraction(1)
    zero = Fraction(0)

    def valid(self, x):
        return isinstance(x, Fraction) and self.admits(x.denominator)

    def admits(self, denominator) -> bool:
        raise NotImplementedError

    def divide(self, x, n):
        y = x / n
        return y if self.admits(y.denominator) else None

    def from_fraction(self, q):
        q = Fraction(q)
        return q if self.admits(q.denominator) else None

    def describe_half(self, x):
        return str((x + 1) / 2)


@dataclass(frozen=True)
class Rationals(_RationalLike):
    def admits(self, denominator):
        return True

    def halving_obstruction(self):
        return None

    def __str__(self):
        return "Rationals"


@dataclass(frozen=True)
class PAdicRationals(_RationalLike):
    """Rationals ``i/p**n``; a reduced denominator must divide some power of p."""

    p: int

    def __post_init__(self):
        if not _is_int(self.p) or self.p < 2:
            raise ValueError("PAdicRationals(p) needs an integer p >= 2")

    def admits(self, denominator):
        d = denominator
        while d > 1:
            g = math.gcd(d, self.p)
            if g == 1:
                return False
            d //= g
        return True

    def halving_obstruction(self):
        if self.p % 2 == 0:
            return None
        # x = 2/p: (x+1)/2 = (2+p)/(2p) needs (2+p)p**n = 2i, odd = even.
        return Fraction(2, self.p)

    def __str__(self):
        return f"PAdicRationals({self.p})"


@dataclass(frozen=True)
class Dyadics(PAdicRationals):
    p: int = 2

    def __post_init__(self):
        if self.p != 2:
            raise ValueError("Dyadics is PAdicRationals(2)")

    def __str__(self):
        return "Dyadics"


@dataclass(frozen=True)
class QuadRing(Carrier):
    """``Z[sqrt 2]`` with unit 1, totally ordered as a subgroup of the reals."""

    unit = Quad(1, 0)
    zero = Quad(0, 0)

    def valid(self, x):
        return isinstance(x, Quad) and _is_int(x.a) and _is_int(x.b)

    def add(self, x, y):
        return Quad(x.a + y.a, x.b + y.b)

    def neg(self, x):
        return Quad(-x.a, -x.b)

    def sub(self, x, y):
        return Quad(x.a - y.a, x.b - y.b)

    def times(self, n, x):
        return Quad(n * x.a, n * x.b)

    def sign(self, x):
        return quad_sign(x.a, x.b)

    def le(self, x, y):
        return quad_sign(y.a - x.a, y.b - x.b) >= 0

    def cmp(self, x, y):
        return quad_sign(x.a - y.a, x.b - y.b)

    def divide(self, x, n):
        if x.a % n == 0 and x.b % n == 0:
            return Quad(x.a // n, x.b // n)
        return None

    def from_fraction(self, q):
        q = Fraction(q)
        return Quad(int(q), 0) if q.denominator == 1 else None

    def halving_obstruction(self):
        # alpha = sqrt(2) - 1; (alpha + 1)/2 = sqrt(2)/2 has coefficient 1/2.
        return ALPHA

    def describe_half(self, x):
        a, b = Fraction(x.a + 1, 2), Fraction(x.b, 2)
        return f"{a} + {b}*sqrt(2)"

    def __str__(self):
        return "QuadRing"


ALPHA = Quad(-1, 1)
"""``sqrt(2) - 1``: the fixed irrational generator of the quadratic subalgebra."""


@dataclass(frozen=True)
class LexZZ(Carrier):
    """``Z x Z`` with lexicographic order and strong unit ``(1, 0)``."""

    unit = Lex(1, 0)
    zero = Lex(0, 0)

    def valid(self, x):
        return isinstance(x, Lex) and _is_int(x.hi) and _is_int(x.lo)

    def add(self, x, y):
        return Lex(x.hi + y.hi, x.lo + y.lo)

    def neg(self, x):
        return Lex(-x.hi, -x.lo)

    def sub(self, x, y):
        return Lex(x.hi - y.hi, x.lo - y.lo)

    def times(self, n, x):
        return Lex(n * x.hi, n * x.lo)

    def divide(self, x, n):
        if x.hi % n == 0 and x.lo % n == 0:
            return Lex(x.hi // n, x.lo // n)
        return None

    def from_fraction(self, q):
        q = Fraction(q)
        return Lex(int(q), 0) if q.denominator == 1 else None

    def describe_half(self, x):
        return f"({Fraction(x.hi + 1, 2)}, {Fraction(x.lo, 2)})"

    def __str__(self):
        return "LexZZ"


def g_add(c: Carrier, x, y):
    """Exact group sum in carrier ``c``."""
    c.check(x, y)
    return c.add(x, y)


def g_cmp(c: Carrier, x, y) -> int:
    """Three-way comparison: ``LT``, ``EQ`` or ``GT``."""
    c.check(x, y)
    return c.cmp(x, y)


def g_half(c: Carrier, x):
    """``y`` with ``y + y == x`` if it exists in ``c``, else None."""
    c.check(x)
    return c.half(x)
