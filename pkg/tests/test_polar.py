"""Polar verdicts, the exact Lie triple test and the Table 3 regeneration."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coiso import ActionInstance, PolarVerdict, lie_triple_test, polar_check
from coiso.polar import PolarDomainError, cartan_flat, numeric_polar_check, sp_section_vectors


@pytest.mark.parametrize("label,k,n,polar,reason", [
    ("so:5", 2, 5, True, "symmetric-pair"),
    ("spin7", 2, 8, False, "orbit-equivalence-reject"),
    ("block(sp:3,triv:1)", 2, 7, False, "lie-triple-reject"),
    ("block(sp:3,triv:1)", 3, 7, False, "bergmann-reject"),
    ("block(su:2,su:3)", 2, 5, True, "symmetric-pair"),
    ("sp:3", 2, 6, True, "symmetric-pair"),
    ("g2", 2, 7, False, "not-coisotropic"),
    ("su:5", 2, 5, True, "transitive"),
    ("block(su:2,sp:2;z)", 2, 6, False, "numeric-criterion"),
])
def test_polar_examples(label, k, n, polar, reason):
    p = polar_check(ActionInstance(label, k, n))
    assert (p.polar, p.reason) == (polar, reason)
    assert p.hyperpolar == polar


def test_symmetric_pairs_hyperpolar():
    for label, k, n in [("so:5", 2, 5), ("block(su:2,su:3)", 2, 5), ("so:6", 3, 6)]:
        p = polar_check(ActionInstance(label, k, n))
        assert p.polar and p.hyperpolar


def test_polar_verdict_validation():
    with pytest.raises(ValueError):
        PolarVerdict(False, True, "symmetric-pair")
    with pytest.raises(ValueError):
        PolarVerdict(True, True, "because")
    assert not PolarVerdict(False, False, "undecided").decided


# -- exact Lie triple test -----------------------------------------------------------------

def test_sp_section_not_lie_triple_n3():
    v1, v2 = sp_section_vectors(3)
    assert v1.dtype.kind == "i" and set(np.unique(v1)) <= {-1, 0, 1}
    assert not lie_triple_test([v1, v2], 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_sp_section_not_lie_triple_all_n(n):
    assert not lie_triple_test(sp_section_vectors(n), 2)


def test_single_vector_is_lie_triple():
    v1, v2 = sp_section_vectors(3)
    assert lie_triple_test([v1], 2)
    assert lie_triple_test([v2], 2)


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 7), (4, 8)])
def test_cartan_flat_is_lie_triple(k, n):
    assert lie_triple_test(cartan_flat(k, n), k)


def test_domain_errors():
    v1, _ = sp_section_vectors(3)
    with pytest.raises(PolarDomainError):
        lie_triple_test([np.eye(7, dtype=int)], 2)
    with pytest.raises(PolarDomainError):
        lie_triple_test([v1 * 0.5], 2)
    with pytest.raises(PolarDomainError):
        lie_triple_test([v1], 3)   # v1 has an entry inside the 3 x 3 diagonal block
    asym = np.zeros((5, 5), dtype=int)
    asym[0, 3] = 1
    with pytest.raises(PolarDomainError):
        lie_triple_test([asym], 2)


def _unimodular(rng, m):
    """A random integer matrix with determinant +-1."""
    u = np.eye(m, dtype=int)
    for _ in range(3 * m):
        i, j = rng.choice(m, 2, replace=False)
        u[i] += int(rng.integers(-2, 3)) * u[j]
    return u


def _recombine(basis, u):
    return [sum(int(u[i, j]) * basis[j] for j in range(len(basis))) for i in range(len(basis))]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["sp", "flat24", "flat38", "mixed"]))
def test_lie_triple_basis_independent(seed, which):
    rng = np.random.default_rng(seed)
    if which == "sp":
        basis, k = sp_section_vectors(3), 2
    elif which == "flat24":
        basis, k = cartan_flat(2, 4), 2
    elif which == "flat38":
        basis, k = cartan_flat(3, 8), 3
    else:
        basis, k = cartan_flat(2, 7) + [sp_section_vectors(3)[1]], 2
    base = lie_triple_test(basis, k)
    assert lie_triple_test(_recombine(basis, _unimodular(rng, len(basis))), k) == base


# -- numeric criterion and closure ----------------------------------------------------------

def test_numeric_criterion_seeds():
    a = ActionInstance("block(su:2,sp:2;z)", 2, 6)
    out = {(r.polar, r.hyperpolar, r.section_dim) for r in (numeric_polar_check(a, seed=s) for s in range(3))}
    assert len(out) == 1


def test_polar_implies_coisotropic(polar10):
    for r in polar10.instances:
        if r.polar:
            assert r.coisotropic, r.key
        assert r.hyperpolar <= r.polar


def test_no_undecided(polar10):
    assert not [r.key for r in polar10.instances if r.reason == "undecided"]


def test_table3_families_polar(polar10):
    for r in polar10.instances:
        if r.row.startswith("P-"):
            assert r.polar, r.key


def test_sp_on_odd_grassmannians_rejected(polar10):
    hits = [r for r in polar10.instances if r.label.startswith("block(sp:") and r.label.endswith(",triv:1)")]
    assert hits and not any(r.polar for r in hits)
