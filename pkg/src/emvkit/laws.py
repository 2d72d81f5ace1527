"""Named law suites run against an algebra and (optionally) its square root.

Each suite draws argument tuples from the algebra's enumeration: exhaustively
when the tuple space is small enough, otherwise a fixed prefix of the
deterministic stream topped up with seeded random picks.  A failing tuple is
shrunk coordinate-wise toward 0 and re-checked before it is reported.

Argument kinds: ``"x"`` is an element, ``"i"`` an idempotent.  Suites that
need an idempotent above some elements build it as ``cover(...) \\/ i``.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebra import Budget, EMVAlgebra, LocalInterval, Product
from .errors import EMVError, InvariantBreach
from .sqrt import (GeneralRoot, SquareRoot, divisible_check, is_strict, sqrt_build,
                   strongly_atomless_check)

PREFIX = 2000


@dataclass
class Context:
    M: EMVAlgebra
    r: Optional[SquareRoot]
    budget: Budget
    xs: list
    idem: list
    exhaustive: bool
    _r0: object = None
    _refined: Optional[list] = None
    _squares: Optional[list] = None

    @property
    def r0(self):
        if self._r0 is None:
            self._r0 = self.r(self.M.zero)
        return self._r0

    @property
    def refined(self):
        """Finer enumeration used as the (Sq2) window pool."""
        if self._refined is None:
            self._refined = self.xs if self.exhaustive else list(self.M.elements(self.budget.refined()))
        return self._refined

    @property
    def squares(self):
        if self._squares is None:
            self._squares = [(y, self.M.odot(y, y)) for y in self.refined]
        return self._squares

    def above(self, i, *xs):
        """An idempotent above ``xs``: their cover joined with ``i``."""
        return self.M.join(self.M.cover(*xs), i)

    def comp(self, x):
        return self.M._lam(self.M.top, x)


@dataclass
class Suite:
    id: str
    statement: str
    kinds: tuple = ()
    needs: frozenset = frozenset()
    check: Optional[Callable] = None
    sampler: Optional[Callable] = None
    run: Optional[Callable] = None  # whole-algebra suites

    def skip_reason(self, ctx: Context) -> Optional[str]:
        M = ctx.M
        if "sqrt" in self.needs and ctx.r is None:
            return "no square root"
        if "top" in self.needs and not M.has_top:
            return "no top element"
        if "chain" in self.needs and not M.is_chain:
            return "not totally ordered"
        if "boolean" in self.needs and not M.is_boolean:
            return "not generalized Boolean"
        if "half" in self.needs and M.half_sum(M.zero, M.zero) is None:
            return "no group half-sums"
        return None


@dataclass
class LawReport:
    suite: str
    algebra: str
    samples: int
    verdict: str  # pass | fail | skipped
    witness: Optional[list] = None
    reason: Optional[str] = None
    value: Optional[bool] = None
    raw_witness: Optional[tuple] = field(default=None, repr=False, compare=False)

    def record(self) -> dict:
        out = {"suite": self.suite, "algebra": self.algebra, "samples": self.samples,
               "verdict": self.verdict, "witness": self.witness}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.value is not None:
            out["value"] = self.value
        return out

    def to_json(self) -> str:
        return json.dumps(self.record(), sort_keys=True)


# ---------------------------------------------------------------------------
# catalog

CATALOG: dict[str, Suite] = {}


def suite(id, statement, kinds=(), needs=(), sampler=None):
    def deco(fn):
        CATALOG[id] = Suite(id, statement, tuple(kinds), frozenset(needs), check=fn, sampler=sampler)
        return fn
    return deco


def global_suite(id, statement, needs=()):
    def deco(fn):
        CATALOG[id] = Suite(id, statement, (), frozenset(needs), run=fn)
        return fn
    return deco


@suite("emv.e1", "distributive lattice with least element 0", "xxx")
def _e1(c, x, y, z):
    M = c.M
    return (M.meet(x, y) == M.meet(y, x) and M.join(x, y) == M.join(y, x)
            and M.meet(M.meet(x, y), z) == M.meet(x, M.meet(y, z))
            and M.join(M.join(x, y), z) == M.join(x, M.join(y, z))
            and M.meet(x, M.join(x, y)) == x and M.join(x, M.meet(x, y)) == x
            and M.meet(x, M.join(y, z)) == M.join(M.meet(x, y), M.meet(x, z))
            and M.meet(M.zero, x) == M.zero
            and M.leq(x, y) == (M.meet(x, y) == x))


@suite("emv.e2", "(M, +, 0) is a commutative monoid, monotone in the order", "xxx")
def _e2(c, x, y, z):
    M = c.M
    big = M.join(x, y)
    return (M.oplus(x, y) == M.oplus(y, x)
            and M.oplus(M.oplus(x, y), z) == M.oplus(x, M.oplus(y, z))
            and M.oplus(x, M.zero) == x
            and M.leq(M.oplus(x, z), M.oplus(big, z)))


@suite("emv.e3", "([0,a], +, lam_a, 0, a) satisfies the MV axioms", "xxi")
def _e3(c, x, y, i):
    M = c.M
    a = c.above(i, x, y)
    n = lambda z: M.lam(a, z)
    return (M.is_idempotent(a) and n(n(x)) == x and M.oplus(x, a) == a and n(M.zero) == a
            and M.oplus(x, n(x)) == a
            and M.oplus(n(M.oplus(n(x), y)), y) == M.oplus(n(M.oplus(n(y), x)), x))


@suite("emv.e4", "every element lies below an idempotent", "x")
def _e4(c, x):
    M = c.M
    a = M.cover(x)
    return M.is_idempotent(a) and M.leq(x, a)


@suite("prop2.2.i", "lam_a(x) = lam_b(x) /\\ a for idempotents a <= b and x <= a", "xii")
def _p22i(c, x, i, j):
    M = c.M
    a = c.above(i, x)
    b = M.join(a, j)
    return M.lam(a, x) == M.meet(M.lam(b, x), a)


@suite("prop2.2.ii", "lam_b(x) = lam_a(x) + lam_b(a) for idempotents a <= b and x <= a", "xii")
def _p22ii(c, x, i, j):
    M = c.M
    a = c.above(i, x)
    b = M.join(a, j)
    return M.lam(b, x) == M.oplus(M.lam(a, x), M.lam(b, a))


@suite("prop2.2.iii", "lam_b(a) is idempotent for idempotents a <= b", "ii")
def _p22iii(c, i, j):
    M = c.M
    b = M.join(i, j)
    return M.is_idempotent(M.lam(b, i))


@suite("lemma2.3.indep", "x (.) y computed inside [0,a] does not depend on a", "xxi")
def _indep(c, x, y, i):
    M = c.M
    a = M.cover(x, y)
    return M.odot_via(a, x, y) == M.odot_via(M.join(a, i), x, y)


@suite("odot.shortcut", "the stored (.) agrees with lam_a(lam_a(x) + lam_a(y))", "xx")
def _shortcut(c, x, y):
    M = c.M
    return M.odot(x, y) == M.odot_via(M.cover(x, y), x, y)


@suite("partial.add", "x + y is defined iff x (.) y = 0; the partial sum is cancellative", "xxx")
def _partial(c, x, y, z):
    M = c.M
    s = M.partial_add(x, y)
    if (s is None) != (M.odot(x, y) != M.zero) or (s is not None and s != M.oplus(x, y)):
        return False
    xz, yz = M.partial_add(x, z), M.partial_add(y, z)
    return not (xz is not None and xz == yz and x != y)


@suite("lemma3.2.i", "(x ->_b y) /\\ a = x ->_a y for idempotents a <= b", "xxii")
def _l32i(c, x, y, i, j):
    M = c.M
    a = c.above(i, x, y)
    b = M.join(a, j)
    return M.meet(M.arrow(b, x, y), a) == M.arrow(a, x, y)


@suite("lemma3.2.ii", "x (.) y <= (x (.) x) \\/ (y (.) y)", "xx")
def _l32ii(c, x, y):
    M = c.M
    return M.leq(M.odot(x, y), M.join(M.odot(x, x), M.odot(y, y)))


# -- square-root laws -----------------------------------------------------------

S = ("sqrt",)


@suite("sq1", "r(x) (.) r(x) = x", "x", S)
def _sq1(c, x):
    rx = c.r(x)
    return c.M.odot(rx, rx) == x


def _window_pairs(c, rng):
    """``(x, y)`` with ``y`` in ``[x \\/ r0, x (+) r0]`` from the refined pool."""
    M, pool = c.M, c.refined
    xs = c.xs
    cap = max(1, 2_000_000 // max(1, len(pool)))
    if len(xs) > cap:
        xs = rng.sample(xs, cap)
    out = []
    per_x = max(1, c.budget.samples // max(1, len(xs)))
    for x in xs:
        lo, hi = M.join(x, c.r0), M.oplus(x, c.r0)
        window = [y for y in pool if M.leq(lo, y) and M.leq(y, hi)]
        if len(window) > per_x:
            window = rng.sample(window, per_x)
        out.extend((x, y) for y in window)
    return out


@suite("sq2", "y (.) y <= x implies y <= r(x)", "xx", S, sampler=_window_pairs)
def _sq2(c, x, y):
    M = c.M
    return not M.leq(M.odot(y, y), x) or M.leq(y, c.r(x))


@suite("prop3.2.i", "x <= x \\/ r(0) <= r(x)", "x", S)
def _p32i(c, x):
    M = c.M
    lo = M.join(x, c.r0)
    return M.leq(x, lo) and M.leq(lo, c.r(x))


@suite("prop3.2.ii", "x <= y implies r(x) <= r(y)", "xx", S)
def _p32ii(c, x, y):
    M = c.M
    y = M.join(x, y)
    return M.leq(c.r(x), c.r(y))


@suite("prop3.2.iii", "r(x) (.) r(y) <= r(x (.) y)", "xx", S)
def _p32iii(c, x, y):
    M, r = c.M, c.r
    return M.leq(M.odot(r(x), r(y)), r(M.odot(x, y)))


@suite("prop3.2.iv", "x /\\ y <= r(x) (.) r(y)", "xx", S)
def _p32iv(c, x, y):
    M, r = c.M, c.r
    return M.leq(M.meet(x, y), M.odot(r(x), r(y)))


@suite("prop3.2.v", "r(x) (.) r(y) <= x \\/ y and x /\\ lam_a(x) <= r(0)", "xxi", S)
def _p32v(c, x, y, i):
    M, r = c.M, c.r
    a = c.above(i, x)
    return M.leq(M.odot(r(x), r(y)), M.join(x, y)) and M.leq(M.meet(x, M.lam(a, x)), c.r0)


@suite("prop3.2.vi", "r(x) is idempotent iff r(x) = x", "x", S)
def _p32vi(c, x):
    rx = c.r(x)
    return c.M.is_idempotent(rx) == (rx == x)


@suite("prop3.2.vii", "r(x /\\ y) = r(x) /\\ r(y)", "xx", S)
def _p32vii(c, x, y):
    M, r = c.M, c.r
    return r(M.meet(x, y)) == M.meet(r(x), r(y))


@suite("prop3.2.viii", "r_b(x) = r(x) /\\ b is a square root on [0,b] with r_b(b) = b", "xi", S)
def _p32viii(c, x, i):
    M, r = c.M, c.r
    b = c.above(i, x)
    rb = M.meet(r(x), b)
    return M.odot(rb, rb) == x and M.meet(r(b), b) == b


@suite("prop3.2.ix", "y <= r(x) (.) r(y) implies y <= x", "xx", S)
def _p32ix(c, x, y):
    M, r = c.M, c.r
    return not M.leq(y, M.odot(r(x), r(y))) or M.leq(y, x)


@suite("prop3.2.x", "r(x) ->_b r(y) = r(x ->_b y) /\\ b when r(x), r(y) <= b", "xxi", S)
def _p32x(c, x, y, i):
    M, r = c.M, c.r
    b = c.above(i, r(x), r(y))
    return M.arrow(b, r(x), r(y)) == M.meet(r(M.arrow(b, x, y)), b)


@suite("prop3.2.xi", "on a generalized Boolean algebra r is the identity", "x", ("sqrt", "boolean"))
def _p32xi(c, x):
    return c.r(x) == x


@suite("prop3.2.xii", "r(x \\/ y) = r(x) \\/ r(y) and r(x (.) y) = (r(x) (.) r(y)) \\/ r(0)", "xx", S)
def _p32xii(c, x, y):
    M, r = c.M, c.r
    return (r(M.join(x, y)) == M.join(r(x), r(y))
            and r(M.odot(x, y)) == M.join(M.odot(r(x), r(y)), c.r0))


@suite("prop3.2.xiii", "(r(0) ->_a 0) (.) (r(0) ->_a 0) is idempotent when r(r(0)) <= a", "i", S)
def _p32xiii(c, i):
    M = c.M
    a = c.above(i, c.r(c.r0))
    n = M.arrow(a, c.r0, M.zero)
    return M.is_idempotent(M.odot(n, n))


@suite("prop3.2.xiv", "x <= r(x (.) x) and r(x (.) x)^2 = r(x)^4", "x", S)
def _p32xiv(c, x):
    M, r = c.M, c.r
    q = r(M.odot(x, x))
    rx = r(x)
    return M.leq(x, q) and M.odot(q, q) == M.odot(M.odot(rx, rx), M.odot(rx, rx))


@suite("rmkcor.bounds", "x \\/ r(0) = r(x (.) x) <= r(x) <= x + r(0); r(a) = a \\/ r(0)", "xi", S)
def _bounds(c, x, i):
    M, r = c.M, c.r
    lo = M.join(x, c.r0)
    return (r(M.odot(x, x)) == lo and M.leq(lo, r(x)) and M.leq(r(x), M.oplus(x, c.r0))
            and r(i) == M.join(i, c.r0))


@suite("prop3.5.i", "r(x ->_a 0) = r(x) ->_a r(0) for idempotent a >= r(r(0)), x", "xi", S)
def _p35i(c, x, i):
    M, r = c.M, c.r
    a = c.above(i, x, r(c.r0))
    return r(M.arrow(a, x, M.zero)) == M.arrow(a, r(x), c.r0)


@suite("prop3.5.ii", "r(x + y) = (r(x) (.) lam_a(r(0))) + r(y) <= r(x) + r(y)", "xxi", S)
def _p35ii(c, x, y, i):
    M, r = c.M, c.r
    a = c.above(i, x, y, r(c.r0))
    s = r(M.oplus(x, y))
    return s == M.oplus(M.odot(r(x), M.lam(a, c.r0)), r(y)) and M.leq(s, M.oplus(r(x), r(y)))


T = ("sqrt", "top")


@suite("lemsqMV.i", "s(x')' + s(x')' = x, hence s(x')' <= x <= s(x)", "x", T)
def _lsq_i(c, x):
    M = c.M
    t = c.comp(c.r(c.comp(x)))
    return M.oplus(t, t) == x and M.leq(t, x) and M.leq(x, c.r(x))


@suite("lemsqMV.ii", "x = s(x')' or x = s(x) forces x Boolean", "x", T)
def _lsq_ii(c, x):
    t = c.comp(c.r(c.comp(x)))
    return not (x == t or x == c.r(x)) or c.M.is_idempotent(x)


@suite("lemsqMV.iii", "x not Boolean implies s(x')' < x < s(x)", "x", T)
def _lsq_iii(c, x):
    M = c.M
    if M.is_idempotent(x):
        return True
    t = c.comp(c.r(c.comp(x)))
    return M.lt(t, x) and M.lt(x, c.r(x))


@suite("prop3.7", "(s(x') (.) s(x'))' = s(x) (.) s(x)", "x", T)
def _p37(c, x):
    M, r = c.M, c.r
    y = r(c.comp(x))
    return c.comp(M.odot(y, y)) == M.odot(r(x), r(x))


@suite("coEMV.formula", "r(x) = (x /\\ w_a) \\/ ((x /\\ w_a') + w_a')/2", "x", ("sqrt", "half"))
def _formula(c, x):
    return GeneralRoot(c.M, c.r0)(x) == c.r(x)


@suite("prop4.1.chain", "on a chain r is the identity (Boolean) or affine with r(0) = r(0)'", "x",
       ("sqrt", "chain"))
def _chain(c, x):
    M = c.M
    if M.is_boolean:
        return c.r(x) == x
    return c.r(x) == M.half_sum(x, M.top) and c.r0 == c.comp(c.r0)


def _capped_points(c, rng):
    cap = max(1, 1_000_000 // max(1, len(c.refined)))
    xs = c.xs if len(c.xs) <= cap else rng.sample(c.xs, cap)
    return [(x,) for x in xs]


@suite("sqrt.oracle", "r(x) = max {y : y (.) y <= x}", "x", S, sampler=_capped_points)
def _oracle(c, x):
    M, rx = c.M, c.r(x)
    below = [y for y, s in c.squares if M.leq(s, x)]
    return M.leq(M.odot(rx, rx), x) and all(M.leq(y, rx) for y in below)


# -- whole-algebra suites -------------------------------------------------------


@global_suite("thm3.5.iff", "M is generalized Boolean iff r(0) = 0", S)
def _thm35(c, rng):
    M = c.M
    odd = next((x for x in c.xs if not M.is_idempotent(x)), None)
    gb = odd is None
    ok = gb == (c.r0 == M.zero)
    return ok, len(c.xs), None if ok else ((odd,) if odd is not None else (c.r0,)), None


@global_suite("def3.9.strict", "r(0) = lam_b(r(0)) for every idempotent b >= r(0) (reported)", S)
def _strict(c, rng):
    try:
        value = is_strict(c.M, c.r, c.budget)
    except InvariantBreach:
        return False, len(c.idem), (c.r0,), True
    return True, len(c.idem), None, value


@global_suite("thm3.10.top", "a strict algebra has a top element", S)
def _thm310(c, rng):
    try:
        value = is_strict(c.M, c.r, c.budget)
    except InvariantBreach:
        return False, len(c.idem), (c.r0,), None
    return (not value or c.M.has_top), len(c.idem), None, None


def surjective_homs(M, idem):
    from .represent import collapse, identity_hom, local_projection, projection
    homs = [identity_hom(M), collapse(M)]
    if isinstance(M, Product) and len(M.factors) > 1:
        homs.extend(projection(M, k) for k in range(len(M.factors)))
    proper = next((a for a in idem if a != M.zero and a != M.top and M.is_idempotent(a)), None)
    if proper is not None:
        homs.append(local_projection(M, proper))
    return homs


@global_suite("corHome.closure", "f preserves square roots iff Im f is closed under s; onto maps preserve", S)
def _corhome(c, rng):
    from .represent import boolean_embedding, preserves_sqrt
    from .algebra import Chain
    from .sqrt import IdentityRoot
    M, small = c.M, Budget(max_denom_exp=3, max_denom=6, max_set=3, lex_bound=4, max_support=2,
                           quad_bound=4, limit=256)
    checked = 0
    homs = [(f, c.r) for f in surjective_homs(M, c.idem)]
    if M.has_top and not M.is_boolean:
        homs.append((boolean_embedding(M), IdentityRoot(Chain(1))))
    for f, r in homs:
        target = sqrt_build(f.target, c.budget)
        if not target.exists:
            return False, checked, (f.name,), None
        try:
            p = preserves_sqrt(f, r, target.root, small)
        except (InvariantBreach, EMVError, KeyError):
            return False, checked, (f.name,), None
        checked += 1
        if not p.consistent or (f.surjective and not p.preserves):
            return False, checked, (f.name,), None
    return True, checked, None, None


@global_suite("def4.1.div", "n.y = x with (n-1).y (.) y = 0 for n <= 4 (reported)")
def _div(c, rng):
    pts = c.xs if len(c.xs) <= 64 else rng.sample(c.xs, 64)
    rep = divisible_check(c.M, 4, c.budget, points=pts)
    return True, rep.checked, None, rep.ok


@global_suite("atomless", "every x > 0 has 0 < z < x with x (.) z' <= z (reported)")
def _atomless(c, rng):
    pts = c.xs if len(c.xs) <= 32 else rng.sample(c.xs, 32)
    rep = strongly_atomless_check(c.M, c.budget, points=pts)
    return True, rep.checked, None, rep.ok


# ---------------------------------------------------------------------------
# running


def _memo(r):
    if r is None:
        return None
    cache = {}

    def cached(x):
        try:
            return cache[x]
        except KeyError:
            cache[x] = y = r(x)
            return y
    return cached


def make_context(M: EMVAlgebra, r: Optional[SquareRoot], budget: Budget) -> Context:
    enum = M.elements(budget)
    idem = [x for x in M.idempotents(budget)]
    return Context(M, _memo(r), budget, list(enum), idem, enum.exhaustive)


def _tuples(s: Suite, c: Context, rng):
    if s.sampler is not None:
        return s.sampler(c, rng)
    pools = [c.xs if k == "x" else c.idem for k in s.kinds]
    total = 1
    for p in pools:
        total *= len(p)
    if total <= c.budget.exhaustive_tuples:
        return list(itertools.product(*pools))
    head = list(itertools.islice(itertools.product(*pools), PREFIX))
    tail = [tuple(rng.choice(p) for p in pools) for _ in range(c.budget.samples - len(head))]
    return head + tail


def _violates(s: Suite, c: Context, args) -> bool:
    """True when ``args`` break the law, or break (Sq1), which every root law presumes."""
    try:
        if "sqrt" in s.needs:
            M = c.M
            for kind, x in zip(s.kinds, args):
                if kind == "x":
                    rx = c.r(x)
                    if M.odot(rx, rx) != x:
                        return True
        return not s.check(c, *args)
    except (EMVError, KeyError, TypeError, AttributeError, ZeroDivisionError):
        return True


def _shrink(s: Suite, c: Context, args):
    """Move coordinates down the order while the violation persists."""
    M = c.M
    args = list(args)
    budget = 400
    changed = True
    while changed and budget > 0:
        changed = False
        for k, kind in enumerate(s.kinds):
            pool = c.xs if kind == "x" else c.idem
            for cand in pool:
                if budget <= 0:
                    break
                try:
                    below = cand != args[k] and M.leq(cand, args[k])
                except Exception:
                    below = False
                if not below:
                    continue
                budget -= 1
                trial = args[:k] + [cand] + args[k + 1:]
                if _violates(s, c, trial):
                    args = trial
                    changed = True
                    break
    return tuple(args)


def run_suite(s: Suite | str, M: EMVAlgebra, r: Optional[SquareRoot] = None,
              budget: Budget = Budget(), seed: int = 0, ctx: Optional[Context] = None) -> LawReport:
    if isinstance(s, str):
        s = CATALOG[s]
    ctx = ctx or make_context(M, r, budget)
    name = str(M)
    reason = s.skip_reason(ctx)
    if reason:
        return LawReport(s.id, name, 0, "skipped", reason=reason)
    rng = random.Random(f"{seed}:{s.id}")
    if s.run is not None:
        ok, n, witness, value = s.run(ctx, rng)
        shown = None if witness is None else [w if isinstance(w, str) else M.fmt(w) for w in witness]
        return LawReport(s.id, name, n, "pass" if ok else "fail", shown, value=value,
                         raw_witness=witness)
    tuples = _tuples(s, ctx, rng)
    for n, args in enumerate(tuples, 1):
        if _violates(s, ctx, args):
            small = args if s.sampler is not None else _shrink(s, ctx, args)
            if not _violates(s, ctx, small):
                raise InvariantBreach(f"{s.id}: witness {small!r} does not re-check")
            return LawReport(s.id, name, n, "fail", [M.fmt(a) for a in small], raw_witness=small)
    return LawReport(s.id, name, len(tuples), "pass")


def run_catalog(M: EMVAlgebra, r: Optional[SquareRoot] = None, budget: Budget = Budget(),
                seed: int = 0, suites=None) -> list[LawReport]:
    """One report per suite, in suite-id order."""
    ctx = make_context(M, r, budget)
    ids = sorted(CATALOG) if suites is None else sorted(suites)
    return [run_suite(CATALOG[i], M, r, budget, seed, ctx) for i in ids]


def auto_root(M: EMVAlgebra, budget: Budget = Budget()) -> Optional[SquareRoot]:
    v = sqrt_build(M, budget)
    return v.root if v.exists else None


def summary(reports) -> dict:
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for rep in reports:
        counts[rep.verdict] += 1
    return counts


__all__ = ["CATALOG", "Suite", "LawReport", "Context", "make_context", "run_suite", "run_catalog",
           "auto_root", "summary", "surjective_homs"]
