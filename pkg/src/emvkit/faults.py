"""Deliberate faults for the harness self-test.

Every fault either corrupts one entry of an operation table on a finite
algebra or perturbs a square-root rule; a sound harness must report at least
one failing suite for each of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import Bool, Budget, Chain, EMVAlgebra, FinSubsets, GammaInterval, Product
from .arith import Dyadics, Rationals
from .laws import run_catalog
from .sqrt import AffineRoot, FunctionRoot, IdentityRoot, sqrt_build


class MutatedAlgebra(EMVAlgebra):
    """``base`` with a single table entry ``op(*args)`` replaced by ``value``."""

    def __init__(self, base: EMVAlgebra, op: str, args: tuple, value):
        self.base, self.op, self.args, self.value = base, op, tuple(args), value

    def __str__(self):
        shown = ",".join(self.base.fmt(a) for a in self.args)
        return f"{self.base}[{self.op}({shown}):={self.base.fmt(self.value)}]"

    def _call(self, op, *args):
        if op == self.op and args == self.args:
            return self.value
        return getattr(self.base, op)(*args)

    @property
    def zero(self):
        return self.base.zero

    @property
    def top(self):
        return self.base.top

    @property
    def is_boolean(self):
        return self.base.is_boolean

    @property
    def is_chain(self):
        return self.base.is_chain

    def size(self):
        return self.base.size()

    def leq(self, x, y):
        return self._call("leq", x, y)

    def meet(self, x, y):
        return self._call("meet", x, y)

    def join(self, x, y):
        return self._call("join", x, y)

    def oplus(self, x, y):
        return self._call("oplus", x, y)

    def odot(self, x, y):
        return self._call("odot", x, y)

    def _lam(self, a, x):
        return self._call("_lam", a, x)

    def is_idempotent(self, x):
        return self.oplus(x, x) == x

    def cover(self, *xs):
        return self.base.cover(*xs)

    def half_sum(self, x, e):
        return self.base.half_sum(x, e)

    def divide(self, x, n):
        return self.base.divide(x, n)

    def contains(self, x):
        return self.base.contains(x)

    def elements(self, budget=Budget()):
        return self.base.elements(budget)

    def idempotents(self, budget=Budget()):
        return self.base.idempotents(budget)

    def fmt(self, x):
        return self.base.fmt(x)


@dataclass(frozen=True)
class Fault:
    name: str
    build: Callable  # () -> (algebra, square root or None)


def _root(M):
    v = sqrt_build(M)
    return v.root if v.exists else None


def _table(base, op, args, value):
    def build():
        M = MutatedAlgebra(base, op, args, value)
        return M, _root(base)
    return build


def _perturbed(M, fn, label):
    def build():
        return M, FunctionRoot(M, fn, label)
    return build


DY = GammaInterval(Dyadics())
Q = GammaInterval(Rationals())
F = Fraction
_dy_affine = AffineRoot(DY)
_q_affine = AffineRoot(Q)
_B3 = Bool(3)
_P = Product((Bool(1), DY))
_P_root = sqrt_build(_P).root
_FS = FinSubsets()


def _nudge(r, at, value):
    return lambda x: value if x == at else r(x)


FAULTS = [
    # square-root perturbations
    Fault("dyadic:r=id", _perturbed(DY, lambda x: x, "id")),
    Fault("dyadic:r(1/4)=1/2", _perturbed(DY, _nudge(_dy_affine, F(1, 4), F(1, 2)), "nudged")),
    Fault("dyadic:r(1/2)+1/64", _perturbed(DY, _nudge(_dy_affine, F(1, 2), F(49, 64)), "nudged")),
    Fault("dyadic:r=1", _perturbed(DY, lambda x: F(1), "const")),
    Fault("bool(3):r=top", _perturbed(_B3, lambda x: (1, 1, 1), "const")),
    Fault("bool(3):r=0", _perturbed(_B3, lambda x: (0, 0, 0), "const")),
    Fault("bool(1)xdyadic:r=id", _perturbed(_P, lambda x: x, "id")),
    Fault("chain(1):r=complement", _perturbed(Chain(1), lambda x: 1 - x, "complement")),
    Fault("rational:r(0)=1/3", _perturbed(Q, _nudge(_q_affine, F(0), F(1, 3)), "nudged")),
    Fault("finsubsets:r=x+{1}", _perturbed(_FS, lambda x: x | {1}, "shifted")),
    Fault("bool(1)xdyadic:r(1,1/4)=(0,5/8)",
          _perturbed(_P, _nudge(_P_root, (1, F(1, 4)), (0, F(5, 8))), "nudged")),
    # single table entries
    Fault("chain(4):oplus(1/4,1/4)", _table(Chain(4), "oplus", (1, 1), 3)),
    Fault("chain(4):meet(1/4,3/4)", _table(Chain(4), "meet", (1, 3), 0)),
    Fault("chain(4):join(0,1/2)", _table(Chain(4), "join", (0, 2), 3)),
    Fault("bool(2):oplus((1,0),(0,1))", _table(Bool(2), "oplus", ((1, 0), (0, 1)), (1, 0))),
    Fault("bool(2):odot((1,1),(1,1))", _table(Bool(2), "odot", ((1, 1), (1, 1)), (1, 0))),
    Fault("chain(3):lam(1,1/3)", _table(Chain(3), "_lam", (3, 1), 1)),
    Fault("chain(2):oplus(1/2,1/2)", _table(Chain(2), "oplus", (1, 1), 1)),
    Fault("chain(1):meet(1,1)", _table(Chain(1), "meet", (1, 1), 0)),
    Fault("chain(4):odot(3/4,3/4)", _table(Chain(4), "odot", (3, 3), 1)),
]


def self_test(budget: Budget = Budget(max_denom_exp=4, samples=2000), seed: int = 0) -> dict:
    """``{fault name: [ids of failing suites]}``; every list should be non-empty."""
    out = {}
    for fault in FAULTS:
        M, r = fault.build()
        reports = run_catalog(M, r, budget, seed)
        out[fault.name] = [rep.suite for rep in reports if rep.verdict == "fail"]
    return out


__all__ = ["MutatedAlgebra", "Fault", "FAULTS", "self_test"]
