"""Root systems, Weyl dimensions, Borel dimensions and the degree filters."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from coiso.lie import (
    HighestWeight,
    InvalidWeightError,
    Irrep,
    ReductiveAlgebra,
    SimpleAlgebraId,
    admissible_A_irreps,
    borel_dim,
    dimensional_filter,
    dual_weight,
    parse_algebra,
    weyl_dim,
)
from coiso.lie import _eq1_bound

A = lambda r: SimpleAlgebraId("A", r)  # noqa: E731


def hw(*c):
    return HighestWeight(tuple(c))


def fund(alg, i, m=1):
    return HighestWeight.fundamental(alg.rank, i, m)


# frozen values: dimensions of the named modules
WEYL_CASES = [
    (A(3), fund(A(3), 2), 6),
    (A(1), fund(A(1), 1, 2), 3),
    (SimpleAlgebraId("C", 3), fund(SimpleAlgebraId("C", 3), 3), 14),
    (SimpleAlgebraId("B", 3), fund(SimpleAlgebraId("B", 3), 3), 8),
    (SimpleAlgebraId("D", 5), fund(SimpleAlgebraId("D", 5), 5), 16),
    (SimpleAlgebraId("E", 6), fund(SimpleAlgebraId("E", 6), 1), 27),
    (SimpleAlgebraId("G", 2), fund(SimpleAlgebraId("G", 2), 1), 7),
    (SimpleAlgebraId("G", 2), fund(SimpleAlgebraId("G", 2), 2), 14),
    (SimpleAlgebraId("F", 4), fund(SimpleAlgebraId("F", 4), 4), 26),
    (SimpleAlgebraId("E", 7), fund(SimpleAlgebraId("E", 7), 7), 56),
    (SimpleAlgebraId("E", 8), fund(SimpleAlgebraId("E", 8), 8), 248),
    (SimpleAlgebraId("B", 5), fund(SimpleAlgebraId("B", 5), 5), 32),
    (SimpleAlgebraId("D", 7), fund(SimpleAlgebraId("D", 7), 7), 64),
    (A(2), hw(1, 1), 8),
    (A(2), hw(3, 0), 10),
]


@pytest.mark.parametrize("alg,w,dim", WEYL_CASES, ids=[f"{a}{w.coeffs}" for a, w, _ in WEYL_CASES])
def test_weyl_dim_values(alg, w, dim):
    assert weyl_dim(alg, w) == dim


@pytest.mark.parametrize("r", range(1, 9))
def test_weyl_dim_defining_A(r):
    assert weyl_dim(A(r), fund(A(r), 1)) == r + 1


def test_weyl_dim_rejects_wrong_length():
    with pytest.raises(InvalidWeightError):
        weyl_dim(A(3), hw(1, 0))


def test_invalid_algebras():
    for s, r in (("B", 1), ("C", 1), ("D", 2), ("E", 5), ("G", 3), ("Q", 2)):
        with pytest.raises(ValueError):
            SimpleAlgebraId(s, r)


def test_negative_weight_rejected():
    with pytest.raises(ValueError):
        HighestWeight((1, -1))


def test_parse_algebra():
    assert parse_algebra("A3") == A(3)
    assert parse_algebra("g2") == SimpleAlgebraId("G", 2)
    assert parse_algebra("su(4)") == A(3)
    assert parse_algebra("sp(2)") == SimpleAlgebraId("C", 2)
    assert parse_algebra("spin(7)") == SimpleAlgebraId("B", 3)
    assert parse_algebra("so(8)") == SimpleAlgebraId("D", 4)


def test_irrep_degree_cached():
    ir = Irrep(A(3), fund(A(3), 2))
    assert ir.degree == 6
    assert ir.dual().hw == ir.hw


ALL_SMALL = [SimpleAlgebraId(s, r) for s in "ABCD" for r in range(1, 9)
             if (s, r) not in {("B", 1), ("C", 1), ("D", 1), ("D", 2)}]
ALL_SMALL += [SimpleAlgebraId("G", 2), SimpleAlgebraId("F", 4), SimpleAlgebraId("E", 6),
              SimpleAlgebraId("E", 7), SimpleAlgebraId("E", 8)]


@pytest.mark.parametrize("alg", ALL_SMALL, ids=str)
def test_trivial_weight_dimension_one(alg):
    assert weyl_dim(alg, HighestWeight.zero(alg.rank)) == 1


@pytest.mark.parametrize("alg", ALL_SMALL, ids=str)
def test_borel_dim_from_roots(alg):
    # dim b = rank + #positive roots = dim g - #positive roots
    assert borel_dim(alg) == alg.dim - len(alg.positive_roots)
    assert borel_dim(alg) == alg.rank + len(alg.positive_roots)


@pytest.mark.parametrize("alg", ALL_SMALL, ids=str)
def test_adjoint_dimension(alg):
    # the adjoint module has dimension dim g; its highest weight is the highest root
    top = max(alg.positive_roots, key=sum)
    cm = alg.cartan_matrix
    coeffs = tuple(sum(top[i] * cm[j][i] for i in range(alg.rank)) for j in range(alg.rank))
    assert weyl_dim(alg, HighestWeight(coeffs)) == alg.dim


def test_borel_values():
    assert borel_dim(SimpleAlgebraId("G", 2)) == 8
    assert borel_dim(SimpleAlgebraId("B", 3)) == 12
    for n in range(2, 10):
        assert borel_dim(A(n - 1)) == (n - 1) * (n + 2) // 2
    assert borel_dim(ReductiveAlgebra((A(1), A(1)), 1)) == 2 + 2 + 1


def test_reductive_dims():
    r = ReductiveAlgebra((A(1), SimpleAlgebraId("C", 2)), 2)
    assert r.dim == 3 + 10 + 2
    assert r.rank == 1 + 2 + 2


def test_dimensional_filter_examples():
    assert not dimensional_filter(SimpleAlgebraId("G", 2), 2, 7)
    assert not dimensional_filter(SimpleAlgebraId("B", 3), 3, 8)
    for n in range(4, 12):
        for k in range(2, n // 2 + 1):
            assert dimensional_filter(A(n - 1), k, n)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL_SMALL), st.sampled_from(ALL_SMALL), st.integers(0, 3),
       st.integers(2, 5), st.integers(0, 8))
def test_dimensional_filter_monotone(a, b, ab, k, extra):
    n = 2 * k + extra
    small = ReductiveAlgebra((a,), ab)
    big = small.add(ReductiveAlgebra((b,), 0))
    if dimensional_filter(small, k, n):
        assert dimensional_filter(big, k, n)


@pytest.mark.parametrize("r", range(1, 9))
def test_weyl_dim_diagram_symmetry_A(r):
    alg = A(r)
    for l in range(1, r + 1):
        assert weyl_dim(alg, fund(alg, l)) == weyl_dim(alg, fund(alg, r + 1 - l))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([a for a in ALL_SMALL if a.rank <= 6]), st.data())
def test_dual_weight_preserves_dimension(alg, data):
    w = HighestWeight(tuple(data.draw(st.integers(0, 2)) for _ in range(alg.rank)))
    d = dual_weight(alg, w)
    assert weyl_dim(alg, d) == weyl_dim(alg, w)
    assert dual_weight(alg, d) == w


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([a for a in ALL_SMALL if a.rank <= 5]), st.data())
def test_weyl_dim_strictly_monotone(alg, data):
    w = [data.draw(st.integers(0, 2)) for _ in range(alg.rank)]
    i = data.draw(st.integers(0, alg.rank - 1))
    up = list(w)
    up[i] += 1
    assert weyl_dim(alg, HighestWeight(tuple(up))) > weyl_dim(alg, HighestWeight(tuple(w)))


def test_admissible_n2():
    out = admissible_A_irreps(2, 2)
    assert set(out) == {hw(1), hw(2)}


def test_admissible_n3_excludes_lambda2_of_sl4_bound():
    # the bound for SL(3) at k = 2 is 9/2
    assert _eq1_bound(3, 2) == Fraction(9, 2)
    assert set(admissible_A_irreps(3, 2)) == {hw(1, 0), hw(0, 1)}


@pytest.mark.parametrize("n", range(3, 9))
def test_admissible_subset_of_fundamentals(n):
    r = n - 1
    allowed = {fund(A(r), i) for i in {1, 2, r - 1, r} if 1 <= i <= r}
    assert set(admissible_A_irreps(n, 2)) <= allowed


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 8) for k in range(2, 4)])
def test_admissible_exhaustive(n, k):
    """Output is exactly the set of weights (coefficients <= 3) meeting the bound."""
    alg = A(n - 1)
    if alg.rank > 6:
        pytest.skip("exhaustive check limited to rank 6")
    out = set(admissible_A_irreps(n, k))
    bound = _eq1_bound(n, k)
    for c in product(range(4), repeat=alg.rank):
        w = HighestWeight(c)
        if w.is_zero():
            continue
        assert (w in out) == (weyl_dim(alg, w) <= bound)
    for w in out:
        assert weyl_dim(alg, w) <= bound


def test_lambda_l_never_admissible():
    # Lambda_l with 2 < l <= n/2 fails the bound for every k >= 2
    for n in range(6, 16):
        for l in range(3, n // 2 + 1):
            d = weyl_dim(A(n - 1), fund(A(n - 1), l))
            for k in range(2, n // 2 + 1):
                assert d > _eq1_bound(n, k)
    for n in range(6, 10):
        out = admissible_A_irreps(n, 2)
        assert not any(fund(A(n - 1), l) in out for l in range(3, n // 2 + 1))


def test_range_bound_is_weaker():
    for n in range(3, 8):
        assert set(admissible_A_irreps(n, 3)) <= set(admissible_A_irreps(n, 3, range_bound=True))
