"""Adjoining a top to a proper EMV-algebra, and moving square roots along maps.

A proper algebra ``M`` sits inside ``N = M + {complements of M}`` as a
maximal ideal.  Elements of ``N`` are :class:`Inl` (an element of ``M``) or
:class:`Compl` (the complement of one); the top is ``Compl(0)``.  Mixed
operations reduce to ``M`` through a local idempotent ``c`` above both
arguments, where ``m' /\\ c = lam_c(m)``.
"""

from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import Budget, EMVAlgebra, Enumeration, Product, Trivial, _View, Chain
from .errors import (HasTopError, HomomorphismError, InvariantBreach, RestrictionError,
                     WellDefinednessError)
from .sqrt import (FunctionRoot, IdentityRoot, SquareRoot, TableRoot, Verdict, classify,
                   sample, sqrt_build, verify_root)


class _Tagged:
    # a plain tuple would make Inl(m) == Compl(m); the hash is cached because
    # elements of M can be expensive to hash
    __slots__ = ("m", "_hash")

    def __init__(self, m):
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_hash", hash((type(self).__name__, m)))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        return type(other) is type(self) and other.m == self.m

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self.m!r})"

    def __reduce__(self):
        return type(self), (self.m,)


class Inl(_Tagged):
    __slots__ = ()


class Compl(_Tagged):
    __slots__ = ()


@dataclass(frozen=True)
class Represented(EMVAlgebra):
    """``N``: the proper algebra ``M`` with complements of its elements adjoined."""

    M: EMVAlgebra

    def __post_init__(self):
        # mixed operations cost several exact operations in M; law runs
        # revisit the same pairs many times
        for name in ("meet", "join", "oplus", "odot"):
            object.__setattr__(self, name, lru_cache(maxsize=1 << 16)(getattr(self, name)))

    def __str__(self):
        return f"repr({self.M})"

    @property
    def zero(self):
        return Inl(self.M.zero)

    @property
    def top(self):
        return Compl(self.M.zero)

    @property
    def is_boolean(self):
        return self.M.is_boolean

    def complement(self, x):
        return Compl(x.m) if isinstance(x, Inl) else Inl(x.m)

    def leq(self, x, y):
        M = self.M
        if isinstance(x, Inl) and isinstance(y, Inl):
            return M.leq(x.m, y.m)
        if isinstance(x, Compl) and isinstance(y, Compl):
            return M.leq(y.m, x.m)
        if isinstance(x, Inl):
            c = M.cover(x.m, y.m)
            return M.leq(x.m, M._lam(c, y.m))
        return False  # a complement is never below an element of a proper M

    def meet(self, x, y):
        M = self.M
        if isinstance(x, Inl) and isinstance(y, Inl):
            return Inl(M.meet(x.m, y.m))
        if isinstance(x, Compl) and isinstance(y, Compl):
            return Compl(M.join(x.m, y.m))
        if isinstance(x, Compl):
            x, y = y, x
        c = M.cover(x.m, y.m)
        return Inl(M.meet(x.m, M._lam(c, y.m)))

    def join(self, x, y):
        return self.complement(self.meet(self.complement(x), self.complement(y)))

    def oplus(self, x, y):
        M = self.M
        if isinstance(x, Inl) and isinstance(y, Inl):
            return Inl(M.oplus(x.m, y.m))
        if isinstance(x, Compl) and isinstance(y, Compl):
            return Compl(M.odot(x.m, y.m))
        if isinstance(x, Compl):
            x, y = y, x
        # x (+) m' = (x' (.) m)' and x' (.) m = lam_c(x) (.) m below c
        c = M.cover(x.m, y.m)
        return Compl(M.odot(M._lam(c, x.m), y.m))

    def odot(self, x, y):
        return self.complement(self.oplus(self.complement(x), self.complement(y)))

    def is_idempotent(self, x):
        return self.M.is_idempotent(x.m)

    def _lam(self, a, x):
        return self.meet(a, self.complement(x))

    def cover(self, *xs):
        if any(isinstance(x, Compl) for x in xs):
            return self.top
        return Inl(self.M.cover(*(x.m for x in xs)))

    def contains(self, x):
        return isinstance(x, (Inl, Compl)) and self.M.contains(x.m)

    def size(self):
        n = self.M.size()
        return None if n is None else 2 * n

    def elements(self, budget=Budget()):
        enum = self.M.elements(budget)
        return Enumeration(tuple(Inl(m) for m in enum) + tuple(Compl(m) for m in enum), enum.exhaustive)

    def idempotents(self, budget=Budget()):
        enum = self.M.idempotents(budget)
        return Enumeration(tuple(Inl(m) for m in enum) + tuple(Compl(m) for m in enum), enum.exhaustive)

    def fmt(self, x):
        return self.M.fmt(x.m) if isinstance(x, Inl) else f"compl({self.M.fmt(x.m)})"

    def from_literal(self, lit):
        return Inl(self.M.from_literal(lit))

    def build_sqrt(self, budget):
        v = sqrt_build(self.M, budget)
        if not v.exists:
            return v
        return Verdict(True, extend_sqrt(self.M, v.root, budget, verify=False))

    def describe(self) -> str:
        """Short human name: ``finite/cofinite`` or ``B x <strict part>``."""
        M = self.M
        if M.is_boolean:
            return "finite/cofinite"
        if isinstance(M, Product):
            names = ["B" if (p.is_boolean and not p.has_top) else str(p) for p in M.parts]
            return "×".join(names)
        return str(self)


def represent_top(M: EMVAlgebra) -> Represented:
    if M.has_top:
        raise HasTopError(f"{M} already has a top element; it represents itself")
    return Represented(M)


def extend_sqrt(M: EMVAlgebra, r: SquareRoot, budget: Budget = Budget(), verify=True) -> SquareRoot:
    """The square root ``R`` on ``represent_top(M)`` with ``R|_M = r``."""
    N = represent_top(M)
    tag = classify(M, r, budget, verify=verify).tag
    if tag == "generalized-boolean":
        return IdentityRoot(N)
    if tag == "strict":
        raise InvariantBreach(f"strict square root on the proper algebra {M}")
    r0 = r(M.zero)

    def R(x):
        if isinstance(x, Inl):
            return Inl(r(x.m))
        rm = r(x.m)
        a = M.cover(rm, r0)
        return Compl(M.odot(rm, M._lam(a, r0)))

    return FunctionRoot(N, R, "extended")


def restrict_sqrt(N: EMVAlgebra, R: SquareRoot, budget: Budget = Budget(), verify=True) -> SquareRoot:
    """``R`` restricted to the embedded ideal; raises if ``R`` leaves it."""
    if isinstance(N, Represented):
        M = N.M
        for m in M.elements(budget):
            if not isinstance(R(Inl(m)), Inl):
                raise RestrictionError(f"R maps {M.fmt(m)} outside {M}")
        r = FunctionRoot(M, lambda m: R(Inl(m)).m, "restricted")
    else:
        # an algebra with top is its own representation
        M = N
        r = R
    if verify:
        pts = sample(M.elements(budget), 256, random.Random(0))
        verify_root(M, r, budget, points=pts, pairs=2048).raise_if_failed(M)
    return r


def describe_root(M: EMVAlgebra, R: SquareRoot) -> str:
    """``identity``, ``affine`` or a per-part tuple like ``(id,affine)``."""
    if R.form == "identity":
        return "identity"
    if R.form == "affine":
        return "affine"
    base = M.M if isinstance(M, Represented) else M
    if isinstance(base, Product):
        names = []
        for p in base.parts:
            v = sqrt_build(p)
            names.append("id" if v.root.form == "identity" else v.root.form)
        return "(" + ",".join(names) + ")"
    return R.describe()


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class Homomorphism:
    source: EMVAlgebra
    target: EMVAlgebra
    fn: Callable
    name: str
    surjective: bool = False

    def __call__(self, x):
        return self.fn(x)

    def verify(self, budget: Budget = Budget(), seed=0, limit=4096) -> list:
        """Failures of ``0``, ``/\\``, ``\\/``, ``(+)`` and ``lam`` preservation on samples."""
        S, T, f = self.source, self.target, self.fn
        rng = random.Random(f"{seed}:hom:{self.name}")
        xs = list(S.elements(budget))
        fails = []
        if f(S.zero) != T.zero:
            fails.append(("zero",))
        pairs = [(x, y) for x in xs for y in xs] if len(xs) ** 2 <= limit else \
            [(rng.choice(xs), rng.choice(xs)) for _ in range(limit)]
        for x, y in pairs:
            for op in ("oplus", "meet", "join"):
                if f(getattr(S, op)(x, y)) != getattr(T, op)(f(x), f(y)):
                    fails.append((op, x, y))
        for b in sample(S.idempotents(budget), 32, rng):
            for x in sample([x for x in xs if S.leq(x, b)], 32, rng):
                if f(S._lam(b, x)) != T._lam(f(b), f(x)):
                    fails.append(("lam", b, x))
        return fails

    def in_image(self, y, budget: Budget = Budget()) -> bool:
        if self.surjective:
            return self.target.contains(y)
        return any(self.fn(x) == y for x in self.source.elements(budget))


class ImageAlgebra(_View):
    """Finite sample of ``f(M)`` inside the target, with the target's operations."""

    def __init__(self, f: Homomorphism, items):
        self.parent = f.target
        self.f = f
        self.items = tuple(dict.fromkeys(items))
        self._set = frozenset(self.items)

    def __str__(self):
        return f"Im({self.f.name})"

    @property
    def top(self):
        return self.parent.top if self.parent.top in self._set else None

    def cover(self, *xs):
        return self.parent.cover(*xs)

    def contains(self, x):
        return x in self._set

    def elements(self, budget=Budget()):
        return Enumeration(self.items, False)

    def size(self):
        return None


def identity_hom(M):
    return Homomorphism(M, M, lambda x: x, "identity", True)


def projection(P: Product, index: int):
    """Projection onto the ``index``-th flattened factor."""
    return Homomorphism(P, P.factors[index], lambda x: x[index], f"proj{index}", True)


def boolean_embedding(M: EMVAlgebra):
    """``{0,1} -> M``: 0 to 0 and 1 to the top."""
    if not M.has_top:
        raise HasTopError(f"{M} has no top to receive 1")
    return Homomorphism(Chain(1), M, lambda x: M.top if x else M.zero, "bool-embed", False)


def collapse(M: EMVAlgebra):
    return Homomorphism(M, Trivial(), lambda x: 0, "collapse", True)


def local_projection(M: EMVAlgebra, a):
    """``x -> x /\\ a`` onto ``[0, a]`` for a Boolean element ``a``."""
    from .algebra import LocalInterval
    return Homomorphism(M, LocalInterval(M, a), lambda x: M.meet(x, a), "local", True)


def inclusion(M: EMVAlgebra):
    N = represent_top(M)
    return Homomorphism(M, N, Inl, "inclusion", False)


def hom_image_sqrt(f: Homomorphism, r: SquareRoot, budget: Budget = Budget(), verify=True) -> SquareRoot:
    """``t(f(x)) = f(r(x))`` on the image; raises if that is not well defined."""
    if f.name == "identity":
        return r
    table = {}
    for x in f.source.elements(budget):
        y, ry = f(x), f(r(x))
        if table.setdefault(y, ry) != ry:
            raise WellDefinednessError(f"f({f.source.fmt(x)}) collides but f(r(.)) differs")
    image = ImageAlgebra(f, table.keys())
    t = TableRoot(image, table)
    if verify:
        check = verify_root(image, t, budget, points=list(table), pool=list(table) + list(table.values()))
        check.raise_if_failed(image)
    return t


@dataclass(frozen=True)
class Preservation:
    preserves: bool
    closed: bool
    witness: Optional[object] = None

    @property
    def consistent(self) -> bool:
        return self.preserves == self.closed

    def __bool__(self):
        return self.preserves


def preserves_sqrt(f: Homomorphism, r: SquareRoot, s: SquareRoot, budget: Budget = Budget()) -> Preservation:
    """``f(r(x)) = s(f(x))`` on samples, cross-checked with closure of ``Im f`` under ``s``."""
    witness = None
    xs = list(f.source.elements(budget))
    for x in xs:
        if f(r(x)) != s(f(x)):
            witness = x
            break
    closed = all(f.in_image(s(f(x)), budget) for x in sample(xs, 64, random.Random(0)))
    result = Preservation(witness is None, closed, witness)
    if f.surjective and not result.preserves:
        raise InvariantBreach(f"surjective {f.name} does not preserve square roots")
    return result


__all__ = [
    "Inl", "Compl", "Represented", "represent_top", "extend_sqrt", "restrict_sqrt", "describe_root",
    "Homomorphism", "ImageAlgebra", "identity_hom", "projection", "boolean_embedding", "collapse",
    "local_projection", "inclusion", "hom_image_sqrt", "Preservation", "preserves_sqrt",
]
