"""Square roots: brute-force oracle, closed forms, existence, strictness,
classification and the Boolean x strict splitting.

A square root ``r`` satisfies

* (Sq1) ``r(x) (.) r(x) = x`` and
* (Sq2) ``y (.) y <= x`` implies ``y <= r(x)``,

so ``r(x)`` is the largest ``y`` with ``y (.) y <= x`` and is unique.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebra import (Annihilator, Budget, EMVAlgebra, Enumeration, FinSubsets, GammaInterval,
                      LocalInterval, Product, Sum, Trivial)
from .arith import Integers, LexZZ, Lex
from .errors import (HalfSumUndefined, InvariantBreach, NotExhaustive, SquareRootError,
                     TagMismatch)

# ---------------------------------------------------------------------------
# square-root representations


class SquareRoot:
    """A unary map on ``M`` claimed to be its square root."""

    form = "function"

    def __init__(self, M: EMVAlgebra):
        self.M = M

    def __call__(self, x):
        raise NotImplementedError

    @property
    def r0(self):
        return self(self.M.zero)

    def describe(self) -> str:
        return self.form

    def __repr__(self):
        return f"<{type(self).__name__} on {self.M}: {self.describe()}>"


class IdentityRoot(SquareRoot):
    form = "identity"

    def __call__(self, x):
        return x


class AffineRoot(SquareRoot):
    """``r(x) = (x + u)/2`` computed in the carrier group."""

    form = "affine"

    def __call__(self, x):
        M = self.M
        y = M.half_sum(x, M.top)
        if y is None:
            raise HalfSumUndefined(x, M.top, f"(x+1)/2 is not in {M} for x={M.fmt(x)}")
        return y


class GeneralRoot(SquareRoot):
    """``r(x) = (x /\\ w) \\/ ((x /\\ w') + w')/2`` with ``w = lam(r0) (.) lam(r0)``.

    Without a top the complements are taken inside the smallest idempotent
    ``a`` above ``r0`` and ``x``; that ``a`` also bounds ``r(r0)``.
    """

    form = "general"

    def __init__(self, M, r0):
        super().__init__(M)
        self._r0 = r0

    @property
    def r0(self):
        return self._r0

    def local_top(self, x):
        M = self.M
        return M.top if M.has_top else M.cover(self._r0, x)

    def w_at(self, a):
        cache = self.__dict__.setdefault("_w", {})
        if a not in cache:
            M = self.M
            c = M.lam(a, self._r0)
            cache[a] = M.odot(c, c)
        return cache[a]

    @property
    def w(self):
        return self.w_at(self.local_top(self.M.zero))

    def __call__(self, x):
        M = self.M
        a = self.local_top(x)
        w = self.w_at(a)
        wc = M._lam(a, w)
        low = M.meet(x, w)
        high = M.half_sum(M.meet(x, wc), wc)
        if high is None:
            raise HalfSumUndefined(M.meet(x, wc), wc)
        return M.join(low, high)

    def describe(self):
        return f"general(w={self.M.fmt(self.w)})"


class TableRoot(SquareRoot):
    form = "table"

    def __init__(self, M, table: dict):
        super().__init__(M)
        self.table = dict(table)

    def __call__(self, x):
        return self.table[x]


class FunctionRoot(SquareRoot):
    """Wraps an arbitrary callable (restrictions, transports, deliberate faults)."""

    def __init__(self, M, fn: Callable, form="function"):
        super().__init__(M)
        self.fn = fn
        self.form = form

    def __call__(self, x):
        return self.fn(x)


# ---------------------------------------------------------------------------
# existence verdicts and witnesses


@dataclass(frozen=True)
class NoMax:
    """``{y : y (.) y <= x}`` contains a strictly increasing chain with no maximum."""

    M: EMVAlgebra
    x: object
    chain: tuple

    def check(self) -> bool:
        M = self.M
        below = all(M.leq(M.odot(y, y), self.x) for y in self.chain)
        rising = all(M.lt(p, q) for p, q in zip(self.chain, self.chain[1:]))
        # For the Chang chain (0,k) each element is beaten by (0,k+1); no
        # element of the form (1,l) qualifies since (1,l)(.)(1,l) = (1,2l).
        if isinstance(M, GammaInterval) and isinstance(M.carrier, LexZZ) and self.x == Lex(0, 0):
            no_top = M.odot(Lex(1, -self.chain[-1].lo), Lex(1, -self.chain[-1].lo)) != M.zero
        else:
            no_top = True
        return below and rising and no_top and len(self.chain) >= 2

    def __str__(self):
        M = self.M
        shown = ", ".join(M.fmt(y) for y in self.chain[:4])
        return f"x={M.fmt(self.x)}: no maximum of {{y : y*y <= x}}; chain {shown}, ... ({len(self.chain)} shown)"


@dataclass(frozen=True)
class Sq1Fail:
    """The oracle maximum exists at ``x`` but does not square back to ``x``."""

    M: EMVAlgebra
    x: object
    candidate: object

    def check(self) -> bool:
        M = self.M
        return M.odot(self.candidate, self.candidate) != self.x

    def __str__(self):
        return f"x={self.M.fmt(self.x)}: max exists but (Sq1) fails"


@dataclass(frozen=True)
class NotClosed:
    """``(x + u)/2`` lies outside the algebra although the carrier forces it."""

    M: EMVAlgebra
    x: object
    value: str

    def check(self) -> bool:
        return self.M.contains(self.x) and self.M.half_sum(self.x, self.M.top) is None

    def __str__(self):
        return f"x={self.M.fmt(self.x)}: (x+1)/2={self.value} not in algebra"


@dataclass(frozen=True)
class InfiniteSupport:
    """A sum whose base has ``r(0) > 0``: ``r(0)`` would need infinite support."""

    base: EMVAlgebra
    r0: object

    def check(self) -> bool:
        return self.r0 != self.base.zero

    def __str__(self):
        return f"base r(0)={self.base.fmt(self.r0)} > 0 at every index; r(0) cannot have finite support"


@dataclass(frozen=True)
class FactorWitness:
    index: int
    factor: EMVAlgebra
    inner: object

    def check(self) -> bool:
        return self.inner.check()

    def __str__(self):
        return f"factor {self.index} ({self.factor}): {self.inner}"


@dataclass(frozen=True)
class Verdict:
    exists: bool
    root: Optional[SquareRoot] = None
    witness: object = None


# ---------------------------------------------------------------------------
# oracle


def _pool(M, budget, pool):
    if pool is not None:
        return list(pool)
    enum = M.elements(budget)
    if not enum.exhaustive:
        raise NotExhaustive(f"{M} is not exhaustively enumerable within the budget")
    return list(enum)


def sqrt_oracle(M: EMVAlgebra, x, budget: Budget = Budget(), pool=None):
    """``max {y : y (.) y <= x}`` over the (exhaustive) enumeration, or None.

    ``pool`` substitutes any finite subset of ``M``; the answer is then the
    maximum over the pool only.
    """
    ys = _pool(M, budget, pool)
    return _oracle_max(M, x, [(y, M.odot(y, y)) for y in ys])


def _oracle_max(M, x, squares):
    below = [y for y, s in squares if M.leq(s, x)]
    if not below:
        return None
    top = M.join_all(below)
    return top if top in set(below) else None


def oracle_table(M, budget=Budget(), pool=None, points=None):
    ys = _pool(M, budget, pool)
    squares = [(y, M.odot(y, y)) for y in ys]
    xs = ys if points is None else points
    return {x: _oracle_max(M, x, squares) for x in xs}


# ---------------------------------------------------------------------------
# construction


def sqrt_build(M: EMVAlgebra, budget: Budget = Budget()) -> Verdict:
    """Decide existence and return the square root (or a checkable witness)."""
    hook = getattr(M, "build_sqrt", None)
    if hook is not None:
        return hook(budget)
    if isinstance(M, Product):
        return _build_product(M, budget)
    if isinstance(M, Sum):
        base = sqrt_build(M.base, budget)
        if not base.exists:
            return Verdict(False, witness=FactorWitness(0, M.base, base.witness))
        r0 = base.root.r0
        if r0 != M.base.zero:
            return Verdict(False, witness=InfiniteSupport(M.base, r0))
        return Verdict(True, IdentityRoot(M))
    if isinstance(M, LocalInterval):
        parent = sqrt_build(M.parent, budget)
        if not parent.exists:
            return parent
        r, a = parent.root, M.a
        return Verdict(True, FunctionRoot(M, lambda x: M.parent.meet(r(x), a), "restricted"))
    if M.is_boolean:
        return Verdict(True, IdentityRoot(M))
    size = M.size()
    if size is not None and size <= budget.limit:
        return _build_finite(M, budget)
    if isinstance(M, GammaInterval):
        return _build_gamma(M, budget)
    raise TypeError(f"no square-root construction for {M}")


def _build_finite(M, budget):
    table = oracle_table(M, budget)
    for x, y in table.items():
        if y is None:
            chain = tuple(z for z in M.elements(budget) if M.leq(M.odot(z, z), x))
            return Verdict(False, witness=NoMax(M, x, chain))
        if M.odot(y, y) != x:
            return Verdict(False, witness=Sq1Fail(M, x, y))
    if all(x == y for x, y in table.items()):
        return Verdict(True, IdentityRoot(M))
    return Verdict(True, TableRoot(M, table))


def _build_gamma(M, budget):
    c = M.carrier
    if isinstance(c, Integers):
        # Squares above 0 share the parity of n, so the first odd-one-out fails.
        x = 1 if c.n % 2 == 0 else 2
        y = (x + c.n) // 2
        return Verdict(False, witness=Sq1Fail(M, x, y))
    if isinstance(c, LexZZ):
        length = max(8, min(budget.lex_bound, 16))
        return Verdict(False, witness=NoMax(M, c.zero, tuple(Lex(0, k) for k in range(1, length + 1))))
    obstruction = c.halving_obstruction()
    if obstruction is not None:
        return Verdict(False, witness=NotClosed(M, obstruction, c.describe_half(obstruction)))
    return Verdict(True, AffineRoot(M))


def _build_product(M, budget):
    roots = []
    for i, f in enumerate(M.factors):
        v = sqrt_build(f, budget)
        if not v.exists:
            return Verdict(False, witness=FactorWitness(i, f, v.witness))
        roots.append(v.root)
    if all(r.form == "identity" for r in roots):
        return Verdict(True, IdentityRoot(M))
    if all(r.form == "affine" for r in roots):
        return Verdict(True, AffineRoot(M))
    return Verdict(True, GeneralRoot(M, tuple(r.r0 for r in roots)))


def sqrt_general_form(M: EMVAlgebra, r0) -> GeneralRoot:
    return GeneralRoot(M, r0)


def witness_for_element(M, x) -> Optional[NotClosed]:
    """Element-specific halving witness, when ``(x+1)/2`` is missing."""
    if isinstance(M, GammaInterval) and M.contains(x) and M.half_sum(x, M.top) is None:
        if not isinstance(M.carrier, (Integers, LexZZ)):
            return NotClosed(M, x, M.carrier.describe_half(x))
    return None


# ---------------------------------------------------------------------------
# verification


@dataclass
class RootCheck:
    ok: bool
    checked: int = 0
    sq1_fail: Optional[tuple] = None
    sq2_fail: Optional[tuple] = None

    def raise_if_failed(self, M):
        if self.sq1_fail:
            x, rx = self.sq1_fail
            raise SquareRootError(f"(Sq1) fails at x={M.fmt(x)}", (x, rx))
        if self.sq2_fail:
            x, y = self.sq2_fail
            raise SquareRootError(f"(Sq2) fails at x={M.fmt(x)}, y={M.fmt(y)}", (x, y))


def sample(items, n, rng):
    items = list(items)
    return items if len(items) <= n else rng.sample(items, n)


def verify_root(M: EMVAlgebra, r: SquareRoot, budget: Budget = Budget(), seed=0,
                points=None, pool=None, pairs=None) -> RootCheck:
    """(Sq1) on ``points``; (Sq2) for ``y`` drawn from the window
    ``[x \\/ r0, x (+) r0]`` inside ``pool`` (a refined enumeration by default).
    """
    rng = random.Random(f"{seed}:verify")
    xs = list(points) if points is not None else list(M.elements(budget))
    ys = list(pool) if pool is not None else list(M.elements(budget.refined()))
    r0 = r(M.zero)
    checked = 0
    for x in xs:
        rx = r(x)
        checked += 1
        if M.odot(rx, rx) != x:
            return RootCheck(False, checked, sq1_fail=(x, rx))
    cap = pairs if pairs is not None else max(budget.samples, len(xs))
    per_x = max(1, cap // max(1, len(xs)))
    for x in xs:
        lo, hi = M.join(x, r0), M.oplus(x, r0)
        window = [y for y in ys if M.leq(lo, y) and M.leq(y, hi)]
        rx = r(x)
        for y in sample(window, per_x, rng):
            checked += 1
            if M.leq(M.odot(y, y), x) and not M.leq(y, rx):
                return RootCheck(False, checked, sq2_fail=(x, y))
    return RootCheck(True, checked)


# ---------------------------------------------------------------------------
# strictness and classification


def is_strict(M: EMVAlgebra, r: SquareRoot, budget: Budget = Budget()) -> bool:
    """``r_b(0) = lam_b(r_b(0))`` for every enumerated idempotent ``b >= r(0)``."""
    r0 = r(M.zero)
    cone = [b for b in M.idempotents(budget) if M.leq(r0, b)]
    if M.has_top and M.top not in cone:
        cone.append(M.top)
    strict = bool(cone) and all(M.meet(r0, b) == M._lam(b, M.meet(r0, b)) for b in cone)
    if strict and not M.has_top:
        raise InvariantBreach(f"strict square root on {M}, which has no top")
    return strict


@dataclass(frozen=True)
class Classification:
    tag: str  # "generalized-boolean" | "strict" | "product"
    boolean: object = None
    strict: object = None
    w: object = None

    def __str__(self):
        return self.tag


def _product_parts(M, r0):
    """Group the declared product parts into Boolean (r0 = 0) and strict ones."""
    if not isinstance(M, Product):
        return None
    boolean, strict, i = [], [], 0
    for part in M.parts:
        k = len(part.factors) if isinstance(part, Product) else 1
        coords = r0[i:i + k]
        zeros = tuple(f.zero for f in M.factors[i:i + k])
        if coords == zeros:
            boolean.append(part)
        elif all(c != z for c, z in zip(coords, zeros)):
            strict.append(part)
        else:
            return None
        i += k
    join = lambda ps: ps[0] if len(ps) == 1 else Product(tuple(ps))
    return join(boolean), join(strict)


def classify(M: EMVAlgebra, r: SquareRoot, budget: Budget = Budget(), verify=True) -> Classification:
    if verify:
        pts = sample(M.elements(budget), 256, random.Random(0))
        verify_root(M, r, budget, points=pts, pairs=2048).raise_if_failed(M)
    r0 = r(M.zero)
    if r0 == M.zero:
        return Classification("generalized-boolean")
    if is_strict(M, r, budget):
        return Classification("strict")
    dec = decompose(M, r, budget, check_tag=False)
    parts = _product_parts(M, r0)
    if parts is None:
        parts = (dec.boolean, dec.strict)
    return Classification("product", parts[0], parts[1], dec.t)


@dataclass
class Decomposition:
    """``M ~ M1 x M2`` with ``M1`` generalized Boolean and ``M2 = [0, e]`` strict."""

    M: EMVAlgebra
    r: SquareRoot
    a: object
    t: object
    e: object
    boolean: EMVAlgebra = field(repr=False)
    strict: EMVAlgebra = field(repr=False)

    def phi(self, x):
        M = self.M
        b = M.cover(x, self.e)
        return (M.meet(x, M._lam(b, self.e)), M.meet(x, self.e))

    def compose(self, pair):
        return self.M.join(*pair)

    def verify(self, budget: Budget = Budget(), seed=0, points=None) -> list:
        """Exhaustive (or sampled) check that ``phi`` is a bijective homomorphism.

        Returns a list of failure descriptions (empty when everything holds).
        """
        M, fails = self.M, []
        xs = list(points) if points is not None else list(M.elements(budget))
        images = {}
        for x in xs:
            p = self.phi(x)
            if not (self.boolean.contains(p[0]) and self.strict.contains(p[1])):
                fails.append(("range", x))
            if self.compose(p) != x:
                fails.append(("roundtrip", x))
            if p in images and images[p] != x:
                fails.append(("injective", x, images[p]))
            images[p] = x
        for y in self.boolean.elements(budget):
            if not self.boolean.is_idempotent(y):
                fails.append(("boolean-part", y))
        for z in self.strict.elements(budget):
            for y in list(self.boolean.elements(budget))[:16]:
                if self.phi(self.compose((y, z))) != (y, z):
                    fails.append(("surjective", y, z))
        rng = random.Random(f"{seed}:phi")
        pairs = [(x, y) for x in xs for y in xs] if len(xs) ** 2 <= budget.exhaustive_tuples else \
            [(rng.choice(xs), rng.choice(xs)) for _ in range(budget.samples)]
        for x, y in pairs:
            px, py = self.phi(x), self.phi(y)
            for name, op in (("oplus", M.oplus), ("meet", M.meet), ("join", M.join), ("odot", M.odot)):
                want = (op(px[0], py[0]), op(px[1], py[1]))
                if self.phi(op(x, y)) != want:
                    fails.append((name, x, y))
        r0 = self.r(M.zero)
        if M.meet(r0, self.e) != M._lam(self.e, M.meet(r0, self.e)):
            fails.append(("strict-part", self.e))
        return fails

    def boolean_shape(self, budget: Budget = Budget()):
        """``(cardinality, atoms)`` of the Boolean part over the enumeration."""
        items = list(self.boolean.elements(budget))
        nonzero = [x for x in items if x != self.M.zero]
        atoms = [x for x in nonzero if not any(self.M.lt(y, x) for y in nonzero)]
        return len(items), len(atoms)


def decompose(M: EMVAlgebra, r: SquareRoot, budget: Budget = Budget(), check_tag=True) -> Decomposition:
    if check_tag:
        tag = classify(M, r, budget, verify=False).tag
        if tag != "product":
            raise TagMismatch(f"{M} classifies as {tag}; there is nothing to split")
    r0 = r(M.zero)
    a = M.top if M.has_top else M.cover(r(r0))
    c = M.lam(a, r0)
    t = M.odot(c, c)
    e = M._lam(a, t)
    return Decomposition(M, r, a, t, e,
                         Annihilator(M, e, boolean=True),
                         LocalInterval(M, e))


# ---------------------------------------------------------------------------
# divisibility, atomlessness, finite tribes


@dataclass
class CheckReport:
    ok: bool
    checked: int
    failures: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)


def _nth_part(M, x, n, budget):
    if isinstance(M, Product):
        parts = [_nth_part(f, c, n, budget) for f, c in zip(M.factors, x)]
        return None if any(p is None for p in parts) else tuple(parts)
    y = M.divide(x, n)
    if y is None and (M.size() or budget.limit + 1) <= budget.limit:
        for z in M.elements(budget):
            if M.ntimes(n, z) == x and M.odot(M.ntimes(n - 1, z), z) == M.zero:
                return z
    return y


def divisible_check(M: EMVAlgebra, n_max: int = 12, budget: Budget = Budget(), points=None) -> CheckReport:
    """Def-style divisibility: ``n.y = x`` and ``(n-1).y (.) y = 0``; failures are ``(x, n)``."""
    xs = list(points) if points is not None else list(M.elements(budget))
    if points is None and M.has_top:
        xs = [M.top] + [x for x in xs if x != M.top]
    report = CheckReport(True, 0)
    for x in xs:
        for n in range(2, n_max + 1):
            report.checked += 1
            y = _nth_part(M, x, n, budget)
            if y is None or not (M.ntimes(n, y) == x and M.odot(M.ntimes(n - 1, y), y) == M.zero):
                report.ok = False
                report.failures.append((x, n))
            else:
                report.witnesses[(x, n)] = y
    return report


def strongly_atomless_check(M: EMVAlgebra, budget: Budget = Budget(), points=None) -> CheckReport:
    """Every sampled ``x > 0`` needs ``0 < z < x`` with ``x (.) z' <= z``."""
    pool = list(M.elements(budget))
    xs = list(points) if points is not None else pool
    report = CheckReport(True, 0)

    def good(x, z):
        if z is None or not (M.lt(M.zero, z) and M.lt(z, x)):
            return False
        a = M.cover(x, z)
        return M.leq(M.odot(x, M._lam(a, z)), z)

    for x in xs:
        if x == M.zero:
            continue
        report.checked += 1
        half = M.divide(x, 2)
        z = half if good(x, half) else next((z for z in pool if good(x, z)), None)
        if z is None:
            report.ok = False
            report.failures.append(x)
        else:
            report.witnesses[x] = z
    return report


@dataclass
class TribeReport:
    omega_size: int
    halving_closed: bool
    dyadic_constants: bool
    sqrt_valid: bool
    strict: bool
    witness: object = None

    @property
    def consistent(self) -> bool:
        return self.halving_closed == self.dyadic_constants == self.sqrt_valid


def tribe_criteria_check(omega_size: int, carrier, budget: Budget = Budget()) -> TribeReport:
    """Finite-domain function algebra ``[0,1]^Omega`` over ``carrier``."""
    from fractions import Fraction

    unit = GammaInterval(carrier)
    M = Product((unit,) * omega_size)
    obstruction = carrier.halving_obstruction()
    witness = None
    if obstruction is not None:
        const = (obstruction,) * omega_size
        if M.half_sum(const, M.top) is None:
            witness = const
    if witness is None:
        for f in M.elements(budget):
            if M.half_sum(f, M.top) is None:
                witness = f
                break
    halving = witness is None
    dyadic = all(carrier.from_fraction(Fraction(k, 2 ** m)) is not None
                 for m in range(budget.max_denom_exp + 1) for k in range(2 ** m + 1))
    sqrt_ok = strict = False
    if halving:
        r = AffineRoot(M)
        pts = sample(M.elements(budget), 512, random.Random(0))
        sqrt_ok = verify_root(M, r, budget, points=pts, pairs=4096).ok
        strict = sqrt_ok and is_strict(M, r, budget)
    return TribeReport(omega_size, halving, dyadic, sqrt_ok, strict, witness)


__all__ = [
    "SquareRoot", "IdentityRoot", "AffineRoot", "GeneralRoot", "TableRoot", "FunctionRoot",
    "NoMax", "Sq1Fail", "NotClosed", "InfiniteSupport", "FactorWitness", "Verdict",
    "sqrt_oracle", "oracle_table", "sqrt_build", "sqrt_general_form", "witness_for_element",
    "RootCheck", "verify_root", "is_strict", "Classification", "classify", "Decomposition",
    "decompose", "CheckReport", "divisible_check", "strongly_atomless_check", "TribeReport",
    "tribe_criteria_check", "sample",
]
