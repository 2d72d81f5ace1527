from fractions import Fraction as F
from itertools import product as cartesian

import pytest

from emvkit import (AffineRoot, Budget, GeneralRoot, IdentityRoot, NotExhaustive, TagMismatch, classify,
                    decompose, divisible_check, is_strict, parse_descriptor, sqrt_build,
                    sqrt_general_form, sqrt_oracle, strongly_atomless_check, tribe_criteria_check,
                    verify_root)
from emvkit.arith import Dyadics, PAdicRationals, Rationals
from emvkit.sqrt import NoMax, NotClosed, Sq1Fail, witness_for_element

B = Budget(max_denom_exp=3, max_set=3, lex_bound=8, max_support=2)


def chain_oracle(n, x):
    """max {y : max(2y - n, 0) <= x} on the chain 0..n, by brute force."""
    return max(y for y in range(n + 1) if max(2 * y - n, 0) <= x)


@pytest.mark.parametrize("n", range(1, 9))
def test_chain_oracle_matches(n):
    M = parse_descriptor(f"chain({n})")
    for x in range(n + 1):
        assert sqrt_oracle(M, x) == chain_oracle(n, x)


def test_oracle_examples():
    M = parse_descriptor("bool(2)")
    assert sqrt_oracle(M, (1, 0)) == (1, 0)
    C2 = parse_descriptor("chain(2)")
    c = sqrt_oracle(C2, 1)
    assert c == 1 and C2.odot(c, c) != 1
    assert sqrt_oracle(parse_descriptor("chain(1)"), 0) == 0
    with pytest.raises(NotExhaustive):
        sqrt_oracle(parse_descriptor("dyadic"), F(1, 2), B)


def test_build_dyadic():
    M = parse_descriptor("dyadic")
    v = sqrt_build(M)
    assert v.exists and isinstance(v.root, AffineRoot)
    assert v.root(F(3, 4)) == F(7, 8)
    assert is_strict(M, v.root)


def test_build_chain2():
    v = sqrt_build(parse_descriptor("chain(2)"))
    assert not v.exists and isinstance(v.witness, Sq1Fail) and v.witness.check()
    assert str(v.witness) == "x=1/2: max exists but (Sq1) fails"


def test_build_padic3():
    M = parse_descriptor("padic(3)")
    v = sqrt_build(M)
    assert not v.exists and isinstance(v.witness, NotClosed) and v.witness.check()
    assert v.witness.x == F(2, 3)
    assert str(v.witness) == "x=2/3: (x+1)/2=5/6 not in algebra"
    assert witness_for_element(M, F(2, 3)).x == F(2, 3)


def test_build_chang_and_quad():
    v = sqrt_build(parse_descriptor("chang"))
    assert isinstance(v.witness, NoMax) and v.witness.check() and len(v.witness.chain) >= 8
    q = sqrt_build(parse_descriptor("quad"))
    assert not q.exists and q.witness.check()


def test_general_form_example():
    M = parse_descriptor("product(bool(1),dyadic)")
    r = sqrt_general_form(M, (0, F(1, 2)))
    assert r.w == (1, 0)
    assert r((1, F(1, 4))) == (1, F(5, 8))
    pool = list(M.elements(Budget(max_denom_exp=4)))
    for x in M.elements(Budget(max_denom_exp=3)):
        assert r(x) == sqrt_oracle(M, x, pool=pool)


def test_is_strict_examples():
    assert not is_strict(parse_descriptor("bool(3)"), IdentityRoot(parse_descriptor("bool(3)")))
    M = parse_descriptor("product(bool(1),rational)")
    r = sqrt_build(M).root
    assert r((0, 0)) == (0, F(1, 2)) and not is_strict(M, r)


def test_verify_root_catches_identity():
    M = parse_descriptor("dyadic")
    assert verify_root(M, AffineRoot(M), B).ok
    bad = verify_root(M, IdentityRoot(M), B)
    assert not bad.ok and bad.sq1_fail is not None


def test_classify_examples():
    assert classify(parse_descriptor("finsubsets"), IdentityRoot(parse_descriptor("finsubsets")), B).tag \
        == "generalized-boolean"
    Q = parse_descriptor("rational")
    assert classify(Q, AffineRoot(Q), B).tag == "strict"
    M = parse_descriptor("product(bool(2),dyadic)")
    c = classify(M, sqrt_build(M).root, B)
    assert (c.tag, str(c.boolean), str(c.strict), c.w) == ("product", "bool(2)", "dyadic", (1, 1, 0))


def test_decompose_example():
    M = parse_descriptor("product(bool(1),dyadic)")
    d = decompose(M, sqrt_build(M).root, B)
    assert d.t == (1, 0)
    p = d.phi((1, F(3, 4)))
    assert p == ((1, 0), (0, F(3, 4)))
    assert d.compose(p) == (1, F(3, 4))
    assert d.verify(Budget(max_denom_exp=3)) == []
    assert d.boolean_shape(B) == (2, 1)


@pytest.mark.parametrize("desc", ["bool(2)", "dyadic"])
def test_decompose_refuses(desc):
    M = parse_descriptor(desc)
    with pytest.raises(TagMismatch):
        decompose(M, sqrt_build(M).root, B)


def test_divisibility():
    Q = parse_descriptor("rational")
    assert divisible_check(Q, 12, Budget(max_denom=6)).ok
    d = divisible_check(parse_descriptor("dyadic"), 12, B)
    assert not d.ok and d.failures[0] == (1, 3)
    S = parse_descriptor("sum(rational)")
    assert divisible_check(S, 6, Budget(max_denom=3, max_support=2)).ok


def test_atomless():
    Q = parse_descriptor("rational")
    rep = strongly_atomless_check(Q, Budget(max_denom=12), points=[F(1, 3)])
    assert rep.ok and rep.witnesses[F(1, 3)] == F(1, 6)
    # independent check of the witness: x ⊙ z' = max(x - z, 0)
    assert max(F(1, 3) - F(1, 6), 0) <= F(1, 6)
    b = strongly_atomless_check(parse_descriptor("bool(2)"), points=[(1, 0)])
    assert not b.ok and b.failures == [(1, 0)]
    assert not strongly_atomless_check(parse_descriptor("chain(4)"), points=[1]).ok


def brute_atomless_chain(n, x):
    return any(0 < z < x and max(x - z, 0) <= z for z in range(n + 1))


@pytest.mark.parametrize("n", [2, 4, 6])
def test_atomless_chain_vs_brute(n):
    M = parse_descriptor(f"chain({n})")
    rep = strongly_atomless_check(M)
    for x in range(1, n + 1):
        assert (x not in rep.failures) == brute_atomless_chain(n, x)


def test_tribes():
    t = tribe_criteria_check(3, Dyadics(), Budget(max_denom_exp=2))
    assert t.halving_closed and t.sqrt_valid and t.strict and t.consistent
    p = tribe_criteria_check(3, PAdicRationals(3), Budget(max_denom_exp=2))
    assert not p.halving_closed and p.witness == (F(2, 3),) * 3 and p.consistent
    q = tribe_criteria_check(1, Rationals(), Budget(max_denom=6))
    assert q.halving_closed and q.sqrt_valid and q.strict


def test_product_root_componentwise():
    M = parse_descriptor("product(chain(1),dyadic,bool(2))")
    r = sqrt_build(M).root
    for x in M.elements(Budget(max_denom_exp=2)):
        assert r(x) == (x[0], (x[1] + 1) / 2, x[2], x[3])


def test_product_with_bad_factor():
    v = sqrt_build(parse_descriptor("product(dyadic,chain(2))"))
    assert not v.exists and v.witness.index == 1 and v.witness.check()


@pytest.mark.parametrize("desc", ["sum(chain(1))", "sum(bool(2))"])
def test_sum_boolean(desc):
    v = sqrt_build(parse_descriptor(desc))
    assert v.exists and isinstance(v.root, IdentityRoot)


def test_sum_strict_base_has_no_root():
    v = sqrt_build(parse_descriptor("sum(dyadic)"))
    assert not v.exists and v.witness.check()
