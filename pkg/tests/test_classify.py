"""Numeric oracle, symbolic slice pipeline and the telescopic classifier."""

import random

import numpy as np
import pytest

from coiso import (
    ActionInstance,
    DegenerateNumericsError,
    EngineDisagreement,
    Verdict,
    classify_action,
    numeric_cohomogeneity,
    regenerate_tables,
)
from coiso.catalog import catalog_rows, rows_of
from coiso.oracle import Certificate, cohomogeneity_of_generators, is_coisotropic_numeric


def act(label, k, n):
    return ActionInstance(label, k, n)


# -- action instances -----------------------------------------------------------------

def test_k_normalized_to_dual():
    a = act("so:7", 5, 7)
    assert (a.k, a.n) == (2, 7)


def test_projective_space_rejected():
    with pytest.raises(ValueError, match="mf"):
        act("su:4", 1, 4)
    with pytest.raises(ValueError):
        act("su:4", 0, 4)


def test_verdict_invariant():
    with pytest.raises(ValueError):
        Verdict(False, True, "", Certificate("numeric-rank"))


# -- numeric oracle ---------------------------------------------------------------------

def test_so4_gr24_coisotropic():
    r = numeric_cohomogeneity(act("so:4", 2, 4))
    assert r.group_rank == 2
    assert r.chm == r.group_rank - r.isotropy_rank
    assert r.coisotropic


def test_g2_gr27_not_coisotropic():
    r = numeric_cohomogeneity(act("g2", 2, 7))
    assert r.chm > r.group_rank - r.isotropy_rank


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6), (3, 8)])
def test_su_n_transitive(k, n):
    r = numeric_cohomogeneity(act(f"su:{n}", k, n))
    assert r.chm == 0 and r.orbit_dim == 2 * k * (n - k)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sp_on_projective_space_transitive(n):
    from coiso.embeddings import realize
    r = cohomogeneity_of_generators(realize(f"sp:{n}").generators, 1, 2 * n)
    assert r.chm == 0


def test_spin7_and_tensor_numeric():
    assert is_coisotropic_numeric(act("spin7", 2, 8)).coisotropic
    assert not is_coisotropic_numeric(act("tensor(3,3)", 2, 9)).coisotropic


def test_sp3_gr27_numeric():
    assert is_coisotropic_numeric(act("block(sp:3,triv:1)", 2, 7)).coisotropic


def test_sp3_gr37_numeric():
    """Frozen ranks on 3-planes; the printed table excludes this case (see README)."""
    r = numeric_cohomogeneity(act("block(sp:3,triv:1)", 3, 7))
    assert (r.chm, r.group_rank, r.isotropy_rank) == (3, 3, 0)


def test_line_slope_sensitivity():
    base = "block(su:2,su:2,su:4;line(u(-1/2|1/6|1/6),u(0|-1/2|1/4),slope={}))"
    assert not is_coisotropic_numeric(act(base.format("4/3"), 2, 8)).coisotropic
    assert is_coisotropic_numeric(act(base.format("7/3"), 2, 8)).coisotropic


def test_degenerate_numerics_raised(monkeypatch):
    import coiso.oracle as oracle
    ranks = iter([12, 9] * 8)
    monkeypatch.setattr(oracle, "numeric_rank", lambda a, tol: next(ranks))
    with pytest.raises(DegenerateNumericsError) as err:
        oracle.cohomogeneity_of_generators([np.eye(6) * 1j], 2, 6)
    assert err.value.diagnostics["orbit_dims"][:2] == [12, 9]


def test_desk_scale_bound():
    with pytest.raises(ValueError):
        numeric_cohomogeneity(act("su:17", 2, 17))


# -- classifier -------------------------------------------------------------------------

def test_sp2_su_n_minus_4_gr4n():
    v = classify_action(act("block(sp:2,su:5)", 4, 9))
    assert v.coisotropic and v.certificate.method == "symbolic-slice"
    assert v.minimal_scalars == "none needed"


@pytest.mark.parametrize("k", [2, 3, 4])
def test_z_su_k_su_k_centre_required(k):
    v = classify_action(act(f"block(su:{k},su:{k};z)", k, 2 * k))
    assert v.coisotropic
    assert v.minimal_scalars.startswith("required")
    assert not classify_action(act(f"block(su:{k},su:{k})", k, 2 * k), minimal=False).coisotropic


def test_so_p_tensor_sp_q_rejected():
    for label, n in [("tensor(so:3,sp:1)", 6), ("tensor(so:4,sp:1)", 8)]:
        assert not classify_action(act(label, 2, n)).coisotropic


@pytest.mark.parametrize("label,k,n,method", [
    ("g2", 2, 7, "borel-reject"), ("spin7", 3, 8, "borel-reject"), ("tensor(3,3)", 2, 9, "borel-reject"),
    ("spin7", 2, 8, "symbolic-slice"), ("so:5", 2, 5, "symbolic-slice"),
])
def test_certificate_methods(label, k, n, method):
    assert classify_action(act(label, k, n)).certificate.method == method


def test_adding_centre_suggested():
    v = classify_action(act("block(sp:1,sp:1)", 2, 4))
    assert not v.coisotropic and "adding the centre" in v.minimal_scalars


def test_certificate_replay():
    for label, k, n in [("spin7", 2, 8), ("block(su:3,su:2,su:3)", 2, 8), ("g2", 2, 7)]:
        cert = classify_action(act(label, k, n), seed=11).certificate.numeric
        again = numeric_cohomogeneity(act(label, k, n), trials=cert["trials"], seed=cert["seed"],
                                      tol=cert["tol"])
        assert (again.orbit_dim, again.chm, again.group_rank, again.isotropy_rank) == \
            (cert["orbit_dim"], cert["chm"], cert["group_rank"], cert["isotropy_rank"])
        assert list(again.orbit_dims) == cert["orbit_dims"]


def test_engine_disagreement_message():
    a = act("so:4", 2, 4)
    err = EngineDisagreement(a, {"verdict": True}, {"coisotropic": False})
    assert a.key in str(err)


def _all_instances(n_max=10):
    out = []
    for row in catalog_rows():
        if row.table in ("1", "2", "negative"):
            out.extend(row.instances(n_max))
    return out


def test_duality_and_seeds_sample():
    rng = random.Random(3)
    sample = rng.sample(_all_instances(9), 12)
    for ins in sample:
        a = ins.action
        d = ActionInstance(ins.label, a.n - a.k, a.n)
        base = numeric_cohomogeneity(a)
        assert numeric_cohomogeneity(d).chm == base.chm
        for seed in (1, 2):
            r = numeric_cohomogeneity(a, seed=seed)
            assert (r.chm, r.orbit_dim, r.isotropy_rank) == (base.chm, base.orbit_dim, base.isotropy_rank)


# -- tables -----------------------------------------------------------------------------

def test_regenerate_rejects_large_n():
    with pytest.raises(ValueError):
        regenerate_tables(13)


def test_tables_expected_failures_only(tables10):
    bad = {i.key for i in tables10.disagreements}
    assert {k.split(":", 1)[0] for k in bad} <= {"T2-7", "N-5"}


def test_engines_agree_everywhere(tables10):
    for i in tables10.instances:
        if i.symbolic is not None and i.numeric is not None:
            assert i.symbolic == i.numeric, i.key


def test_no_errors(tables10):
    assert not [i.key for i in tables10.instances if i.error]


def test_agreement_matrix_counts(tables10):
    m = tables10.agreement_matrix()
    assert sum(v["instances"] for v in m.values()) == len(tables10.instances)
    assert m["T1-2"] == {"instances": 1, "as_expected": 1, "both_engines": 1, "engines_agree": 1, "errors": 0}


def test_workers_do_not_change_report():
    a = regenerate_tables(6, workers=1)
    b = regenerate_tables(6, workers=2)
    assert a.to_dict() == b.to_dict()


@pytest.mark.parametrize("row", rows_of("monotone"), ids=lambda r: r.id)
def test_monotone_pairs(row):
    for ins in row.instances(9):
        small = numeric_cohomogeneity(ins.action)
        if small.coisotropic:
            big = numeric_cohomogeneity(ActionInstance(ins.contains, ins.k, ins.n))
            assert big.coisotropic, ins.key
