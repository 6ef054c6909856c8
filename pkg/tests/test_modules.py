"""Module expressions, exact characters and decomposition rewrites."""

import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coiso.lie import HighestWeight, ReductiveAlgebra, SimpleAlgebraId, weyl_dim
from coiso.modules import (
    CharPoly,
    ModuleExpr,
    NotACharacterError,
    RewriteNotice,
    Term,
    char_decompose,
    char_of,
    char_of_expr,
    rewrite,
    to_epsilon,
    weight_multiplicities,
)

A1, A2, B3 = SimpleAlgebraId("A", 1), SimpleAlgebraId("A", 2), SimpleAlgebraId("B", 3)


def hw(*c):
    return HighestWeight(tuple(c))


def mod(alg_list, terms, ab=0):
    return ModuleExpr(ReductiveAlgebra(tuple(alg_list), ab), [Term(f, c) for f, c in terms])


def test_char_su2_defining():
    assert char_of((A1, hw(1))).terms == {(((1,),), ()): 1, (((-1,),), ()): 1}


def test_char_at_one_is_weyl_dim():
    for alg, w in [(A2, hw(2, 1)), (B3, hw(0, 0, 1)), (SimpleAlgebraId("C", 3), hw(0, 0, 1)),
                   (SimpleAlgebraId("G", 2), hw(1, 0)), (SimpleAlgebraId("D", 4), hw(0, 1, 0, 0))]:
        assert char_of((alg, w)).at_one() == weyl_dim(alg, w)


def test_spin7_weights_half_integral():
    wm = weight_multiplicities(B3, hw(0, 0, 1))
    eps = sorted(to_epsilon(B3, w) for w in wm)
    half = Fraction(1, 2)
    expect = sorted((a * half, b * half, c * half) for a in (1, -1) for b in (1, -1) for c in (1, -1))
    assert eps == expect
    assert set(wm.values()) == {1}


def test_su3_tensor_dual_is_adjoint_plus_trivial():
    alg = ReductiveAlgebra((A2,))
    p = char_of((A2, hw(1, 0))) * char_of((A2, hw(0, 1)))
    dec = char_decompose(p, alg)
    assert dec == mod([A2], [((hw(1, 1),), ()), ((hw(0, 0),), ())])


def test_clebsch_gordan_2x2():
    dec = char_decompose(char_of((A1, hw(1))) * char_of((A1, hw(1))), ReductiveAlgebra((A1,)))
    assert dec == mod([A1], [((hw(2),), ()), ((hw(0),), ())])


def test_outer_tensor_irreducible():
    for k, m in [(2, 3), (3, 4), (2, 5)]:
        a, b = SimpleAlgebraId("A", k - 1), SimpleAlgebraId("A", m - 1)
        e = mod([a, b], [((HighestWeight.fundamental(k - 1, k - 1), HighestWeight.fundamental(m - 1, 1)), ())])
        dec = char_decompose(char_of_expr(e), e.algebra)
        assert dec == e and len(dec) == 1


def test_not_a_character():
    bad = CharPoly({(((1,),), ()): 1})   # x alone is not Weyl symmetric
    with pytest.raises(NotACharacterError):
        char_decompose(bad, ReductiveAlgebra((A1,)))
    neg = char_of((A1, hw(1))).scale(-1)
    with pytest.raises(NotACharacterError):
        char_decompose(neg, ReductiveAlgebra((A1,)))


def test_rewrite_tensor_contract():
    # W* (x) W = C + sl(W) for W = C^3
    e = mod([A2], [(((hw(0, 1), hw(1, 0)),), (0,))], ab=1)
    out = rewrite(e, "tensor-contract")
    assert out == mod([A2], [((hw(0, 0),), (0,)), ((hw(1, 1),), (0,))], ab=1)
    assert char_of_expr(out) == char_of_expr(e)


def test_rewrite_sym_alt_split():
    # pi* (x) pi* = S^2 pi* + Lambda^2 pi* under su(4)
    a3 = SimpleAlgebraId("A", 3)
    d = HighestWeight.fundamental(3, 3)
    e = mod([a3], [(((d, d),), (-2,))], ab=1)
    out = rewrite(e, "sym-alt-split")
    assert out == mod([a3], [((hw(0, 0, 2),), (-2,)), ((hw(0, 1, 0),), (-2,))], ab=1)
    assert out.dim == 16


def test_rewrite_dual_involution():
    e = mod([A2, A1], [((hw(2, 0), hw(1)), (Fraction(1, 3),)), ((hw(0, 1), ()), (-1,))], ab=1)
    assert rewrite(rewrite(e, "dual"), "dual") == e


def test_rewrite_not_applicable_warns():
    e = mod([A2], [((hw(1, 0),), ())])
    with pytest.warns(RewriteNotice):
        assert rewrite(e, "tensor-contract") == e
    with pytest.raises(ValueError):
        rewrite(e, "nonsense")


def test_term_validation():
    with pytest.raises(ValueError):
        mod([A2], [((hw(1, 0), hw(1)), ())])  # wrong number of factors is caught by length
    with pytest.raises(ValueError):
        ModuleExpr(ReductiveAlgebra((A2,), 1), [Term((hw(1, 0),), ())])


def test_duplicate_terms_merge():
    e = mod([A1], [((hw(1),), ()), ((hw(1),), ())])
    assert len(e.terms) == 1 and len(e) == 2 and e.dim == 4


SMALL = [SimpleAlgebraId("A", r) for r in range(1, 5)] + [
    SimpleAlgebraId("B", 2), SimpleAlgebraId("B", 3), SimpleAlgebraId("C", 3),
    SimpleAlgebraId("D", 4), SimpleAlgebraId("G", 2)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_decompose_of_char_is_identity(alg, data):
    w = HighestWeight(tuple(data.draw(st.integers(0, 2)) for _ in range(alg.rank)))
    if weyl_dim(alg, w) > 400:
        return
    dec = char_decompose(char_of((alg, w)), ReductiveAlgebra((alg,)))
    assert dec == ModuleExpr(ReductiveAlgebra((alg,)), [Term((w,), ())])


weights_a2 = st.tuples(st.integers(0, 2), st.integers(0, 2)).map(HighestWeight)
weights_a1 = st.integers(0, 3).map(lambda x: HighestWeight((x,)))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.lists(weights_a2, min_size=1, max_size=2), weights_a1,
                          st.fractions(-3, 3, max_denominator=3)), min_size=1, max_size=3),
       st.sampled_from(["tensor-contract", "sym-alt-split", "dual", "trivial-strip"]))
def test_rewrite_preserves_character(terms, rule):
    e = ModuleExpr(ReductiveAlgebra((A2, A1), 1), [Term((tuple(f), (b,)), (c,)) for f, b, c in terms])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RewriteNotice)
        out = rewrite(e, rule)
    if rule == "dual":
        assert char_of_expr(out) == char_of_expr(e).conjugate()
    else:
        assert char_of_expr(out) == char_of_expr(e)
        assert out.dim == e.dim == char_of_expr(e).at_one()


def test_pretty_uses_standard_names():
    a3 = SimpleAlgebraId("A", 3)
    e = mod([a3], [((hw(0, 0, 1),), (1,)), ((hw(0, 1, 0),), (2,))], ab=1)
    s = e.pretty()
    assert "C^4*" in s and "L2(C^4)" in s
