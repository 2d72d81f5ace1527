from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from emvkit.arith import (ALPHA, EQ, GT, LT, Dyadics, Integers, Lex, LexZZ, PAdicRationals, Quad,
                          QuadRing, Rationals, g_add, g_cmp, g_half, quad_sign)
from emvkit.errors import CarrierMismatch

ints = st.integers(-10**6, 10**6)


def test_add_examples():
    assert g_add(Rationals(), F(1, 3), F(1, 6)) == F(1, 2)
    assert g_add(LexZZ(), Lex(0, 3), Lex(0, 4)) == Lex(0, 7)
    assert g_add(QuadRing(), Quad(1, -1), Quad(-1, 2)) == Quad(0, 1)


def test_cmp_examples():
    assert g_cmp(QuadRing(), Quad(3, -2), Quad(0, 0)) == GT
    assert g_cmp(LexZZ(), Lex(1, -2), Lex(0, 100)) == GT
    assert g_cmp(Dyadics(), F(3, 8), F(1, 2)) == LT
    assert g_cmp(Integers(4), 2, 2) == EQ


def test_half_examples():
    assert g_half(Dyadics(), F(3, 4)) == F(3, 8)
    assert g_half(Integers(3), 1) is None
    # (2+p)p^n = 2i has no solution for odd p
    assert g_half(PAdicRationals(3), F(1) + F(2, 3)) is None
    assert g_half(PAdicRationals(3), F(1)) is None
    assert g_half(PAdicRationals(6), F(1, 3)) == F(1, 6)


def test_mismatch():
    with pytest.raises(CarrierMismatch):
        g_add(Dyadics(), F(1, 3), F(0))
    with pytest.raises(CarrierMismatch):
        g_cmp(QuadRing(), (1, 2), Quad(0, 0))
    with pytest.raises(CarrierMismatch):
        g_half(Integers(2), F(1, 2))
    with pytest.raises(CarrierMismatch):
        g_add(Integers(2), True, 1)


def test_padic_membership():
    c = PAdicRationals(6)
    assert c.valid(F(1, 4)) and c.valid(F(5, 27)) and not c.valid(F(1, 5))
    assert not PAdicRationals(3).valid(F(1, 2))
    with pytest.raises(ValueError):
        PAdicRationals(1)
    with pytest.raises(ValueError):
        Integers(0)


def test_obstructions():
    assert Integers(4).halving_obstruction() == 1
    assert Integers(3).halving_obstruction() == 0
    assert PAdicRationals(9).halving_obstruction() == F(2, 9)
    assert PAdicRationals(8).halving_obstruction() is None
    assert QuadRing().halving_obstruction() == ALPHA
    assert g_half(QuadRing(), g_add(QuadRing(), ALPHA, QuadRing().unit)) is None


@given(ints, ints)
def test_quad_sign_matches_float_when_definite(a, b):
    s = quad_sign(a, b)
    v = a + b * 1.4142135623730951
    err = 1e-9 * (abs(a) + abs(b) + 1)
    if v > err:
        assert s == GT
    elif v < -err:
        assert s == LT
    assert (s == EQ) == (a == 0 and b == 0)


@given(ints, ints)
def test_quad_sign_antisymmetric(a, b):
    assert quad_sign(-a, -b) == -quad_sign(a, b)


quads = st.builds(Quad, ints, ints)
lexes = st.builds(Lex, ints, ints)
rats = st.builds(F, st.integers(-1000, 1000), st.integers(1, 1000))


@pytest.mark.parametrize("carrier,elems", [(QuadRing(), quads), (LexZZ(), lexes), (Rationals(), rats)])
def test_group_laws(carrier, elems):
    @given(elems, elems, elems)
    def run(x, y, z):
        assert carrier.add(x, y) == carrier.add(y, x)
        assert carrier.add(carrier.add(x, y), z) == carrier.add(x, carrier.add(y, z))
        assert carrier.add(x, carrier.zero) == x
        if carrier.le(x, y):
            assert carrier.le(carrier.add(x, z), carrier.add(y, z))
        assert carrier.le(x, y) or carrier.le(y, x)
        h = carrier.half(carrier.add(x, x))
        assert h == x
    run()
