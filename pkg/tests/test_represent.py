from fractions import Fraction as F
from itertools import product as cartesian

import pytest

from emvkit import (Budget, Compl, HasTopError, Inl, IdentityRoot, RestrictionError, extend_sqrt,
                    hom_image_sqrt, parse_descriptor, preserves_sqrt, represent_top, restrict_sqrt,
                    run_catalog, sqrt_build, verify_root)
from emvkit.algebra import Trivial
from emvkit.represent import (boolean_embedding, collapse, describe_root, identity_hom, inclusion,
                              projection)
from emvkit.sqrt import FunctionRoot, is_strict

B = Budget(max_set=3, max_denom_exp=2, max_support=2)


def as_set(x, universe):
    """Model of finite/cofinite: complements taken inside a universe one larger than the truncation."""
    return frozenset(x.m) if isinstance(x, Inl) else universe - frozenset(x.m)


def test_finite_cofinite_against_set_model():
    M = parse_descriptor("finsubsets")
    N = represent_top(M)
    U = frozenset(range(1, B.max_set + 2))
    xs = list(N.elements(B))
    assert len(xs) == 2 * len(list(M.elements(B)))
    assert len({as_set(x, U) for x in xs}) == len(xs)
    for x, y in cartesian(xs, repeat=2):
        X, Y = as_set(x, U), as_set(y, U)
        assert as_set(N.oplus(x, y), U) == X | Y
        assert as_set(N.meet(x, y), U) == X & Y
        assert as_set(N.odot(x, y), U) == X & Y
        assert N.leq(x, y) == (X <= Y)
    assert as_set(N.complement(N.parse("{2}")), U) == U - {2}
    assert N.fmt(N.top) == "compl({})"


def test_refuses_top():
    with pytest.raises(HasTopError):
        represent_top(parse_descriptor("chain(4)"))


def test_sum_representation_laws():
    M = parse_descriptor("sum(chain(1))")
    N = represent_top(M)
    reports = run_catalog(N, None, Budget(max_support=3), 0,
                          ["emv.e1", "emv.e2", "emv.e3", "emv.e4", "prop2.2.i", "prop2.2.ii"])
    assert all(r.verdict == "pass" for r in reports), [r.record() for r in reports]


def test_extend_identity():
    M = parse_descriptor("finsubsets")
    R = extend_sqrt(M, IdentityRoot(M), B)
    assert isinstance(R, IdentityRoot)
    assert describe_root(represent_top(M), R) == "identity"
    r = restrict_sqrt(represent_top(M), R, B)
    assert all(r(x) == x for x in M.elements(B))


def test_extend_product_roundtrip():
    M = parse_descriptor("product(finsubsets,dyadic)")
    r = sqrt_build(M).root
    N = represent_top(M)
    R = extend_sqrt(M, r, B)
    assert describe_root(N, R) == "(id,affine)"
    back = restrict_sqrt(N, R, B)
    for x in M.elements(B):
        assert back(x) == r(x)
    # top goes to top, and (Sq1) holds on the complements
    assert R(N.top) == N.top
    for x in N.elements(B):
        assert N.odot(R(x), R(x)) == x
    assert not is_strict(N, R, B)


def test_extended_value_by_hand():
    M = parse_descriptor("product(finsubsets,dyadic)")
    N = represent_top(M)
    R = extend_sqrt(M, sqrt_build(M).root, B)
    # complement of ({1}, 1/4) is (cofinite without 1, 3/4); its root is (same, 7/8)
    x = Compl((frozenset({1}), F(1, 4)))
    assert R(x) == Compl((frozenset({1}), F(1, 8)))


def test_restrict_rejects_escaping_root():
    M = parse_descriptor("finsubsets")
    N = represent_top(M)
    bad = FunctionRoot(N, lambda x: N.top, "const")
    with pytest.raises(RestrictionError):
        restrict_sqrt(N, bad, B)


def test_degenerate_restrict():
    T = Trivial()
    assert restrict_sqrt(T, IdentityRoot(T))(0) == 0


def test_projection_image():
    P = parse_descriptor("product(bool(1),dyadic)")
    r = sqrt_build(P).root
    f = projection(P, 1)
    t = hom_image_sqrt(f, r, Budget(max_denom_exp=4))
    for k in range(17):
        x = F(k, 16)
        assert t(x) == (x + 1) / 2
    assert preserves_sqrt(f, r, sqrt_build(f.target).root, Budget(max_denom_exp=4)).preserves


def test_identity_and_collapse():
    M = parse_descriptor("dyadic")
    r = sqrt_build(M).root
    assert hom_image_sqrt(identity_hom(M), r) is r
    assert preserves_sqrt(identity_hom(M), r, r, B).preserves
    c = collapse(M)
    assert hom_image_sqrt(c, r, B)(0) == 0


def test_bool_embedding_not_preserving():
    Q = parse_descriptor("rational")
    f = boolean_embedding(Q)
    p = preserves_sqrt(f, IdentityRoot(f.source), sqrt_build(Q).root, Budget(max_denom=4))
    assert not p.preserves and not p.closed and p.consistent and p.witness == 0


def test_homomorphisms_verify():
    P = parse_descriptor("product(bool(1),dyadic)")
    assert projection(P, 0).verify(B) == []
    assert boolean_embedding(parse_descriptor("rational")).verify(B) == []
    assert inclusion(parse_descriptor("finsubsets")).verify(B) == []
