"""MV- and EMV-algebras over the exact carriers.

Every algebra is an immutable descriptor object that also carries the
operations.  Elements are plain hashable payloads whose shape depends on
the descriptor:

=====================  ===============================================
descriptor             element payload
=====================  ===============================================
``GammaInterval``      carrier payload in ``[0, u]``
``Bool(k)``            ``tuple`` of ``k`` ints in {0, 1}
``Product``            ``tuple``, one entry per (flattened) factor
``FinSubsets``         ``frozenset`` of naturals
``Sum``                :class:`FinMap` (finite-support index -> element)
=====================  ===============================================

``Bool(k)`` factors are flattened into ``k`` copies of ``chain(1)`` inside a
product, so ``product(bool(2),dyadic)`` has 3-tuples as elements.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import reduce
from typing import Iterator, Optional, Sequence

from . import literals as L
from .arith import (Carrier, Dyadics, Integers, Lex, LexZZ, PAdicRationals,
                    Quad, QuadRing, Rationals)
from .errors import ElementError, ParseError


@dataclass(frozen=True)
class Budget:
    """Enumeration and sampling bounds.

    ``limit`` caps every materialized enumeration; a finite algebra whose
    size is within it is enumerated exhaustively.
    """

    max_denom_exp: int = 6
    max_denom: int = 12
    max_set: int = 8
    lex_bound: int = 64
    max_support: int = 3
    quad_bound: int = 32
    limit: int = 4096
    samples: int = 10_000
    exhaustive_tuples: int = 65_536

    def refined(self) -> "Budget":
        """One notch finer, used for (Sq2) witness windows."""
        return replace(self, max_denom_exp=self.max_denom_exp + 1, max_denom=2 * self.max_denom,
                       lex_bound=2 * self.lex_bound, quad_bound=2 * self.quad_bound,
                       limit=2 * self.limit)


@dataclass(frozen=True)
class Enumeration:
    """A finite, duplicate-free, deterministic list of elements."""

    items: tuple
    exhaustive: bool

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)


def _mixed_radix(pools: Sequence[Sequence], limit: int) -> tuple[tuple, bool]:
    """Cartesian product of ``pools``; a seeded subsample when it exceeds ``limit``."""
    total = 1
    for p in pools:
        total *= len(p)
    if total <= limit:
        return tuple(itertools.product(*pools)), True
    rng = random.Random(0)
    picked = set(rng.sample(range(total), limit - 2))
    picked.update((0, total - 1))
    out = []
    for idx in sorted(picked):
        digits = []
        for p in reversed(pools):
            idx, d = divmod(idx, len(p))
            digits.append(p[d])
        out.append(tuple(reversed(digits)))
    return tuple(out), False


class EMVAlgebra:
    """Common interface and the derived EMV operations.

    Subclasses provide ``zero``, ``top`` (None when proper), ``leq``,
    ``meet``, ``join``, ``oplus``, ``_lam``, ``cover``, ``contains``,
    ``elements``, ``idempotents``, ``fmt`` and ``from_literal``.
    """

    is_boolean = False
    is_chain = False
    zero = None

    @property
    def top(self):
        return None

    @property
    def has_top(self) -> bool:
        return self.top is not None

    def size(self) -> Optional[int]:
        return None

    # -- order --------------------------------------------------------------
    def leq(self, x, y) -> bool:
        return self.meet(x, y) == x

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def meet(self, x, y):
        raise NotImplementedError

    def join(self, x, y):
        raise NotImplementedError

    def meet_all(self, xs):
        return reduce(self.meet, xs)

    def join_all(self, xs):
        return reduce(self.join, xs, self.zero)

    # -- monoid and local complements ----------------------------------------
    def oplus(self, x, y):
        raise NotImplementedError

    def is_idempotent(self, x) -> bool:
        return self.oplus(x, x) == x

    def cover(self, *xs):
        """Canonical smallest idempotent above every ``x`` in ``xs``."""
        raise NotImplementedError

    def lam(self, a, x):
        """Relative complement of ``x`` inside ``[0, a]``."""
        if not self.is_idempotent(a):
            raise ElementError(f"{self.fmt(a)} is not idempotent in {self}")
        if not self.leq(x, a):
            raise ElementError(f"{self.fmt(x)} is not below {self.fmt(a)}")
        return self._lam(a, x)

    def _lam(self, a, x):
        raise NotImplementedError

    def complement(self, x):
        if not self.has_top:
            raise ElementError(f"{self} has no top element")
        return self._lam(self.top, x)

    def odot(self, x, y):
        return self.odot_via(self.cover(x, y), x, y)

    def odot_via(self, a, x, y):
        """``lam_a(lam_a(x) + lam_a(y))`` for an idempotent ``a >= x, y``."""
        return self.lam(a, self.oplus(self.lam(a, x), self.lam(a, y)))

    def ominus(self, x, y):
        return self.odot(x, self._lam(self.cover(x, y), y))

    def arrow(self, a, x, y):
        """Residuum ``x ->_a y = lam_a(x) + y`` inside ``[0, a]``."""
        if not (self.leq(x, a) and self.leq(y, a)):
            raise ElementError("arrow arguments must lie below the idempotent")
        return self.oplus(self.lam(a, x), y)

    def partial_add(self, x, y):
        """``x + y``: defined (as ``x (+) y``) only when ``x (.) y = 0``."""
        return self.oplus(x, y) if self.odot(x, y) == self.zero else None

    def ntimes(self, n, x):
        """``n.x``: ``n``-fold truncated sum."""
        acc = self.zero
        for _ in range(n):
            acc = self.oplus(acc, x)
        return acc

    def power(self, x, n):
        """``x**n`` under the strong conjunction; ``x**0`` only with a top."""
        if n == 0:
            if not self.has_top:
                raise ElementError(f"x^0 is undefined in {self} (no top)")
            return self.top
        acc = x
        for _ in range(n - 1):
            acc = self.odot(acc, x)
        return acc

    # -- group lift ------------------------------------------------------------
    def half_sum(self, x, e):
        """Group value ``(x + e)/2`` for ``x <= e``, ``e`` idempotent; None if absent."""
        return None

    def divide(self, x, n):
        """Exact ``x/n`` in the group when available (None otherwise)."""
        return None

    # -- enumeration and syntax ------------------------------------------------
    def contains(self, x) -> bool:
        raise NotImplementedError

    def require(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise ElementError(f"{x!r} is not an element of {self}")

    def elements(self, budget: Budget = Budget()) -> Enumeration:
        raise NotImplementedError

    def idempotents(self, budget: Budget = Budget()) -> Enumeration:
        enum = self.elements(budget)
        return Enumeration(tuple(x for x in enum if self.is_idempotent(x)), enum.exhaustive)

    def fmt(self, x) -> str:
        return repr(x)

    def from_literal(self, lit):
        raise ElementError(f"{self} has no literal syntax")

    def parse(self, text: str):
        try:
            return self.from_literal(L.parse_literal(text))
        except ElementError as exc:
            raise ParseError(str(exc), text, 0) from None


def _frac_value(lit):
    if not isinstance(lit, L.Frac):
        raise ElementError(f"expected a number, got {lit}")
    return lit.value


@dataclass(frozen=True)
class GammaInterval(EMVAlgebra):
    """``Gamma(G, u)``: the interval ``[0, u]`` of a totally ordered unital group."""

    carrier: Carrier
    is_chain = True

    def __str__(self):
        c = self.carrier
        if isinstance(c, Integers):
            return f"chain({c.n})"
        if isinstance(c, Rationals):
            return "rational"
        if isinstance(c, Dyadics):
            return "dyadic"
        if isinstance(c, PAdicRationals):
            return f"padic({c.p})"
        if isinstance(c, QuadRing):
            return "quad"
        if isinstance(c, LexZZ):
            return "chang"
        return f"gamma({c})"

    @property
    def zero(self):
        return self.carrier.zero

    @property
    def top(self):
        return self.carrier.unit

    @property
    def is_boolean(self):
        return isinstance(self.carrier, Integers) and self.carrier.n == 1

    def size(self):
        return self.carrier.n + 1 if isinstance(self.carrier, Integers) else None

    def leq(self, x, y):
        return self.carrier.le(x, y)

    def meet(self, x, y):
        return x if self.carrier.le(x, y) else y

    def join(self, x, y):
        return y if self.carrier.le(x, y) else x

    def oplus(self, x, y):
        c = self.carrier
        s = c.add(x, y)
        return s if c.le(s, c.unit) else c.unit

    def odot(self, x, y):
        c = self.carrier
        d = c.sub(c.add(x, y), c.unit)
        return d if c.le(c.zero, d) else c.zero

    def _lam(self, a, x):
        return self.carrier.sub(a, x)

    def cover(self, *xs):
        z = self.carrier.zero
        return z if all(x == z for x in xs) else self.carrier.unit

    def half_sum(self, x, e):
        return self.carrier.half(self.carrier.add(x, e))

    def divide(self, x, n):
        return self.carrier.divide(x, n)

    def contains(self, x):
        c = self.carrier
        return c.valid(x) and c.le(c.zero, x) and c.le(x, c.unit)

    def elements(self, budget=Budget()):
        c = self.carrier
        if isinstance(c, Integers):
            items = tuple(range(c.n + 1))
            if len(items) <= budget.limit:
                return Enumeration(items, True)
            step = len(items) / (budget.limit - 1)
            keep = sorted({round(i * step) for i in range(budget.limit - 1)} | {c.n})
            return Enumeration(tuple(keep), False)
        if isinstance(c, Rationals):
            vals = {Fraction(i, q) for q in range(1, budget.max_denom + 1) for i in range(q + 1)}
        elif isinstance(c, PAdicRationals):
            k, power = 1, c.p
            while power * c.p <= 2 ** budget.max_denom_exp:
                k, power = k + 1, power * c.p
            vals = {Fraction(i, power) for i in range(power + 1)}
        elif isinstance(c, QuadRing):
            vals = set()
            for n in range(-budget.quad_bound, budget.quad_bound + 1):
                # m + n*alpha = (m - n) + n*sqrt(2) lies in [0, 1]
                guess = int(-n * 0.41421356237309503)
                for m in range(guess - 2, guess + 3):
                    q = Quad(m - n, n)
                    if self.contains(q):
                        vals.add(q)
        elif isinstance(c, LexZZ):
            vals = {Lex(0, i) for i in range(budget.lex_bound + 1)}
            vals |= {Lex(1, -i) for i in range(budget.lex_bound + 1)}
        else:
            raise NotImplementedError(str(c))
        items = sorted(vals, key=_SortKey(c))
        if len(items) > budget.limit:
            step = len(items) / (budget.limit - 1)
            items = [items[min(round(i * step), len(items) - 1)] for i in range(budget.limit - 1)] + [items[-1]]
            items = list(dict.fromkeys(items))
        return Enumeration(tuple(items), False)

    def idempotents(self, budget=Budget()):
        return Enumeration((self.zero, self.top), True)

    def fmt(self, x):
        c = self.carrier
        if isinstance(c, Integers):
            return str(Fraction(x, c.n))
        if isinstance(c, QuadRing):
            return f"q({x.a + x.b},{x.b})"
        if isinstance(c, LexZZ):
            return f"c({x.hi},{x.lo})"
        return str(x)

    def from_literal(self, lit):
        c = self.carrier
        if isinstance(c, Integers):
            v = _frac_value(lit) * c.n
            if v.denominator != 1:
                raise ElementError(f"{_frac_value(lit)} is not a multiple of 1/{c.n}")
            x = int(v)
        elif isinstance(c, QuadRing):
            if isinstance(lit, L.QuadLit):
                x = Quad(lit.m - lit.n, lit.n)
            else:
                x = c.from_fraction(_frac_value(lit))
        elif isinstance(c, LexZZ):
            if isinstance(lit, L.ChangLit):
                x = Lex(lit.hi, lit.lo)
            else:
                x = c.from_fraction(_frac_value(lit))
        else:
            x = c.from_fraction(_frac_value(lit))
        if x is None or not self.contains(x):
            raise ElementError(f"literal {lit} is not an element of {self}")
        return x


class _SortKey:
    """Sort key adapter for carriers whose order is not Python's native one."""

    def __init__(self, carrier):
        self.carrier = carrier

    def __call__(self, x):
        return _Keyed(self.carrier, x)


class _Keyed:
    __slots__ = ("c", "x")

    def __init__(self, c, x):
        self.c, self.x = c, x

    def __lt__(self, other):
        return self.c.cmp(self.x, other.x) < 0


def Chain(n: int) -> GammaInterval:
    """The (n+1)-element chain ``{0, 1/n, ..., 1}``."""
    return GammaInterval(Integers(n))


def Chang() -> GammaInterval:
    return GammaInterval(LexZZ())


@dataclass(frozen=True)
class Product(EMVAlgebra):
    """Direct product; ``Bool(k)`` parts are flattened into ``chain(1)`` factors."""

    parts: tuple
    factors: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a product needs at least one factor")
        object.__setattr__(self, "parts", parts)
        flat = []
        for p in parts:
            flat.extend(p.factors if isinstance(p, Bool) else (p,))
        object.__setattr__(self, "factors", tuple(flat))

    def __str__(self):
        return "product(" + ",".join(str(p) for p in self.parts) + ")"

    @property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    @property
    def top(self):
        tops = tuple(f.top for f in self.factors)
        return None if any(t is None for t in tops) else tops

    @property
    def is_boolean(self):
        return all(f.is_boolean for f in self.factors)

    @property
    def is_chain(self):
        return len(self.factors) == 1 and self.factors[0].is_chain

    def size(self):
        total = 1
        for f in self.factors:
            s = f.size()
            if s is None:
                return None
            total *= s
        return total

    def leq(self, x, y):
        return all(f.leq(a, b) for f, a, b in zip(self.factors, x, y))

    def meet(self, x, y):
        return tuple(f.meet(a, b) for f, a, b in zip(self.factors, x, y))

    def join(self, x, y):
        return tuple(f.join(a, b) for f, a, b in zip(self.factors, x, y))

    def oplus(self, x, y):
        return tuple(f.oplus(a, b) for f, a, b in zip(self.factors, x, y))

    def odot(self, x, y):
        return tuple(f.odot(a, b) for f, a, b in zip(self.factors, x, y))

    def is_idempotent(self, x):
        return all(f.is_idempotent(a) for f, a in zip(self.factors, x))

    def _lam(self, a, x):
        return tuple(f._lam(p, q) for f, p, q in zip(self.factors, a, x))

    def cover(self, *xs):
        return tuple(f.cover(*(x[i] for x in xs)) for i, f in enumerate(self.factors))

    def half_sum(self, x, e):
        out = tuple(f.half_sum(a, b) for f, a, b in zip(self.factors, x, e))
        return None if any(v is None for v in out) else out

    def divide(self, x, n):
        out = tuple(f.divide(a, n) for f, a in zip(self.factors, x))
        return None if any(v is None for v in out) else out

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == len(self.factors)
                and all(f.contains(a) for f, a in zip(self.factors, x)))

    def elements(self, budget=Budget()):
        enums = [f.elements(budget) for f in self.factors]
        items, complete = _mixed_radix([e.items for e in enums], budget.limit)
        return Enumeration(items, complete and all(e.exhaustive for e in enums))

    def idempotents(self, budget=Budget()):
        enums = [f.idempotents(budget) for f in self.factors]
        items, complete = _mixed_radix([e.items for e in enums], budget.limit)
        return Enumeration(items, complete and all(e.exhaustive for e in enums))

    def fmt(self, x):
        return "(" + ",".join(f.fmt(a) for f, a in zip(self.factors, x)) + ")"

    def from_literal(self, lit):
        if not isinstance(lit, L.TupleLit) or len(lit.items) != len(self.factors):
            raise ElementError(f"{self} elements are {len(self.factors)}-tuples")
        return tuple(f.from_literal(i) for f, i in zip(self.factors, lit.items))


class Bool(Product):
    """The finite Boolean algebra ``2**k``, i.e. ``k`` copies of ``chain(1)``."""

    def __init__(self, k: int):
        if not isinstance(k, int) or k < 1:
            raise ValueError("bool(k) needs k >= 1")
        object.__setattr__(self, "k", k)
        super().__init__((Chain(1),) * k)

    def __str__(self):
        return f"bool({self.k})"

    def __repr__(self):
        return f"Bool({self.k})"

    is_boolean = True


@dataclass(frozen=True)
class FinSubsets(EMVAlgebra):
    """Finite subsets of the naturals: a generalized Boolean algebra with no top."""

    is_boolean = True
    zero = frozenset()

    def __str__(self):
        return "finsubsets"

    def leq(self, x, y):
        return x <= y

    def meet(self, x, y):
        return x & y

    def join(self, x, y):
        return x | y

    def oplus(self, x, y):
        return x | y

    def odot(self, x, y):
        return x & y

    def is_idempotent(self, x):
        return True

    def _lam(self, a, x):
        return a - x

    def cover(self, *xs):
        return frozenset().union(*xs)

    def half_sum(self, x, e):
        # Boolean coordinates: (x + e)/2 is integral only where x = e.
        return e if x == e else None

    def divide(self, x, n):
        return x if (n == 1 or not x) else None

    def contains(self, x):
        return isinstance(x, frozenset) and all(isinstance(i, int) and i >= 0 for i in x)

    def elements(self, budget=Budget()):
        universe = range(1, budget.max_set + 1)
        subsets = [frozenset(c) for r in range(len(universe) + 1) for c in itertools.combinations(universe, r)]
        if len(subsets) > budget.limit:
            subsets, _ = _subsample(subsets, budget.limit)
        return Enumeration(tuple(subsets), False)

    def idempotents(self, budget=Budget()):
        return self.elements(budget)

    def fmt(self, x):
        return "{" + ",".join(str(i) for i in sorted(x)) + "}"

    def from_literal(self, lit):
        if not isinstance(lit, L.SetLit):
            if isinstance(lit, L.Frac) and lit.value == 0:
                return frozenset()
            raise ElementError(f"{self} elements are sets like {{1,3}}")
        return lit.members


def _subsample(items, limit):
    rng = random.Random(0)
    keep = sorted(set(rng.sample(range(len(items)), limit - 2)) | {0, len(items) - 1})
    return [items[i] for i in keep], False


class FinMap:
    """Immutable finite-support map ``index -> element``; zero entries are omitted."""

    __slots__ = ("_d", "_key")

    def __init__(self, entries=()):
        d = dict(entries)
        object.__setattr__(self, "_d", d)
        object.__setattr__(self, "_key", tuple(sorted(d.items(), key=lambda kv: kv[0])))

    def __setattr__(self, name, value):
        raise AttributeError("FinMap is immutable")

    def get(self, i, default=None):
        return self._d.get(i, default)

    @property
    def support(self):
        return tuple(i for i, _ in self._key)

    def items(self):
        return self._key

    def __iter__(self):
        return iter(self._key)

    def __len__(self):
        return len(self._key)

    def __eq__(self, other):
        return isinstance(other, FinMap) and self._key == other._key

    def __hash__(self):
        return hash(("FinMap", self._key))

    def __repr__(self):
        return f"FinMap({dict(self._key)!r})"


@dataclass(frozen=True)
class Sum(EMVAlgebra):
    """Finite-support sum of countably many copies of an MV-algebra (no top)."""

    base: EMVAlgebra

    def __post_init__(self):
        if not self.base.has_top:
            raise ValueError("sum(...) needs a base algebra with a top element")

    def __str__(self):
        return f"sum({self.base})"

    @property
    def zero(self):
        return FinMap()

    @property
    def is_boolean(self):
        return self.base.is_boolean

    def _pointwise(self, op, *maps):
        z = self.base.zero
        idx = sorted(set().union(*(m.support for m in maps)))
        out = {}
        for i in idx:
            v = op(*(m.get(i, z) for m in maps))
            if v != z:
                out[i] = v
        return FinMap(out)

    def leq(self, x, y):
        z = self.base.zero
        return all(self.base.leq(x.get(i, z), y.get(i, z)) for i in set(x.support) | set(y.support))

    def meet(self, x, y):
        return self._pointwise(self.base.meet, x, y)

    def join(self, x, y):
        return self._pointwise(self.base.join, x, y)

    def oplus(self, x, y):
        return self._pointwise(self.base.oplus, x, y)

    def odot(self, x, y):
        return self._pointwise(self.base.odot, x, y)

    def _lam(self, a, x):
        z = self.base.zero
        out = {}
        for i, ai in a:
            v = self.base._lam(ai, x.get(i, z))
            if v != z:
                out[i] = v
        return FinMap(out)

    def cover(self, *xs):
        return self._pointwise(self.base.cover, *xs) if xs else FinMap()

    def half_sum(self, x, e):
        z = self.base.zero
        out = {}
        for i, ei in e:
            v = self.base.half_sum(x.get(i, z), ei)
            if v is None:
                return None
            if v != z:
                out[i] = v
        return FinMap(out) if self.leq(x, e) else None

    def divide(self, x, n):
        out = {}
        for i, xi in x:
            v = self.base.divide(xi, n)
            if v is None:
                return None
            out[i] = v
        return FinMap(out)

    def contains(self, x):
        z = self.base.zero
        return (isinstance(x, FinMap)
                and all(isinstance(i, int) and i >= 0 and v != z and self.base.contains(v) for i, v in x))

    def _maps(self, pool, budget):
        idx = range(1, budget.max_support + 1)
        combos, complete = _mixed_radix([pool] * len(idx), budget.limit)
        z = self.base.zero
        return tuple(FinMap({i: v for i, v in zip(idx, c) if v != z}) for c in combos)

    def elements(self, budget=Budget()):
        return Enumeration(self._maps(self.base.elements(budget).items, budget), False)

    def idempotents(self, budget=Budget()):
        return Enumeration(self._maps(self.base.idempotents(budget).items, budget), False)

    def fmt(self, x):
        return "[" + ",".join(f"{i}:{self.base.fmt(v)}" for i, v in x) + "]"

    def from_literal(self, lit):
        if not isinstance(lit, L.MapLit):
            if isinstance(lit, L.Frac) and lit.value == 0:
                return FinMap()
            raise ElementError(f"{self} elements are maps like [1:1/2,3:1]")
        z = self.base.zero
        out = {}
        for i, v in lit.entries:
            val = self.base.from_literal(v)
            if val != z:
                out[i] = val
        return FinMap(out)


@dataclass(frozen=True)
class Trivial(EMVAlgebra):
    """The one-element algebra ``{0}`` (target of the collapsing homomorphism)."""

    zero = 0
    is_boolean = True
    is_chain = True

    def __str__(self):
        return "trivial"

    @property
    def top(self):
        return 0

    def size(self):
        return 1

    def leq(self, x, y):
        return True

    def meet(self, x, y):
        return 0

    join = oplus = odot = meet

    def _lam(self, a, x):
        return 0

    def cover(self, *xs):
        return 0

    def half_sum(self, x, e):
        return 0

    def divide(self, x, n):
        return 0

    def contains(self, x):
        return x == 0 and not isinstance(x, bool)

    def elements(self, budget=Budget()):
        return Enumeration((0,), True)

    def fmt(self, x):
        return "0"

    def from_literal(self, lit):
        if isinstance(lit, L.Frac) and lit.value == 0:
            return 0
        raise ElementError("the trivial algebra only contains 0")


class _View(EMVAlgebra):
    """A sub-EMV-algebra that borrows every operation from ``parent``."""

    parent: EMVAlgebra

    @property
    def zero(self):
        return self.parent.zero

    def leq(self, x, y):
        return self.parent.leq(x, y)

    def meet(self, x, y):
        return self.parent.meet(x, y)

    def join(self, x, y):
        return self.parent.join(x, y)

    def oplus(self, x, y):
        return self.parent.oplus(x, y)

    def odot(self, x, y):
        return self.parent.odot(x, y)

    def is_idempotent(self, x):
        return self.parent.is_idempotent(x)

    def _lam(self, a, x):
        return self.parent._lam(a, x)

    def half_sum(self, x, e):
        return self.parent.half_sum(x, e)

    def divide(self, x, n):
        y = self.parent.divide(x, n)
        return y if y is not None and self.contains(y) else None

    def elements(self, budget=Budget()):
        enum = self.parent.elements(budget)
        items = [x for x in enum if self.contains(x)]
        if self.has_top and self.top not in items:
            items.append(self.top)
        return Enumeration(tuple(items), enum.exhaustive)

    def idempotents(self, budget=Budget()):
        enum = self.parent.idempotents(budget)
        items = [x for x in enum if self.contains(x)]
        if self.has_top and self.top not in items:
            items.append(self.top)
        return Enumeration(tuple(items), enum.exhaustive)

    def size(self):
        n = self.parent.size()
        if n is None:
            return None
        return len(self.elements(Budget(limit=max(n, 2))))

    def fmt(self, x):
        return self.parent.fmt(x)

    def from_literal(self, lit):
        x = self.parent.from_literal(lit)
        if not self.contains(x):
            raise ElementError(f"{self.fmt(x)} is not in {self}")
        return x


@dataclass(frozen=True)
class LocalInterval(_View):
    """The local MV-algebra ``[0, a]`` of an idempotent ``a``."""

    parent: EMVAlgebra
    a: object
    boolean: bool = False

    def __str__(self):
        return f"[0,{self.parent.fmt(self.a)}] of {self.parent}"

    @property
    def top(self):
        return self.a

    @property
    def is_boolean(self):
        return self.boolean

    def cover(self, *xs):
        return self.parent.meet(self.parent.cover(*xs), self.a)

    def contains(self, x):
        return self.parent.contains(x) and self.parent.leq(x, self.a)


@dataclass(frozen=True)
class Annihilator(_View):
    """``{x : x /\\ e = 0}`` for a Boolean element ``e``."""

    parent: EMVAlgebra
    e: object
    boolean: bool = False

    def __str__(self):
        return f"ann({self.parent.fmt(self.e)}) of {self.parent}"

    @property
    def top(self):
        p = self.parent
        return p._lam(p.top, self.e) if p.has_top else None

    @property
    def is_boolean(self):
        return self.boolean

    def cover(self, *xs):
        p = self.parent
        c = p.cover(*xs, self.e)
        return p.meet(p.cover(*xs), p._lam(c, self.e))

    def contains(self, x):
        return self.parent.contains(x) and self.parent.meet(x, self.e) == self.parent.zero


def enumerate_elements(M: EMVAlgebra, budget: Budget = Budget()) -> Enumeration:
    return M.elements(budget)


def idempotents(M: EMVAlgebra, budget: Budget = Budget()) -> Enumeration:
    return M.idempotents(budget)


def mv_oplus(M, x, y):
    M.require(x, y)
    return M.oplus(x, y)


def mv_lambda(M, a, x):
    M.require(a, x)
    return M.lam(a, x)


def mv_odot(M, x, y):
    M.require(x, y)
    return M.odot(x, y)


def mv_partial_add(M, x, y):
    M.require(x, y)
    return M.partial_add(x, y)


def mv_arrow(M, a, x, y):
    M.require(a, x, y)
    if not M.is_idempotent(a):
        raise ElementError(f"{M.fmt(a)} is not idempotent")
    return M.arrow(a, x, y)
