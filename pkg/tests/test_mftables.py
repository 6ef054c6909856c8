"""Multiplicity-free tables: database, matching and the numeric oracle."""

import json
from importlib import resources
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coiso.mftables import (
    CATALOGUED_NEGATIVES,
    MF,
    MF_MORE_SCALARS,
    NOT_MF,
    dump_table,
    instantiate,
    load_table,
    match_mf,
    numeric_mf_check,
    parse_module,
    table_rows,
)
from coiso.mftables import _block_shape, _blocks, _match_block
from coiso.modules import ModuleExpr, Term


def smallest_instances(entry, count=2, max_dim=40):
    """The ``count`` smallest admissible parameter bindings with dim V <= max_dim."""
    found = []
    for values in sorted(product(range(1, 12), repeat=len(entry.params)), key=lambda v: (sum(v), v)):
        env = dict(zip(entry.params, values))
        inst = instantiate(entry, env)
        if inst is None:
            continue
        m = inst.module()
        if m.dim <= max_dim:
            found.append((env, m))
        if len(found) == count:
            break
    return found


ROWS = {e.id: e for e in table_rows()}


def test_database_round_trip_byte_identical():
    path = resources.files("coiso").joinpath("data", "mf_tables.json")
    text = path.read_text(encoding="utf-8")
    assert dump_table(load_table()) == text


def test_every_row_once_and_counts():
    ids = [e.id for e in table_rows()]
    assert len(ids) == len(set(ids))
    counts = {t: sum(e.table == t for e in table_rows()) for t in ("Ia", "Ib", "IIa", "IIb")}
    assert counts == {"Ia": 14, "Ib": 6, "IIa": 13, "IIb": 8}


def test_bad_rows_rejected(tmp_path):
    data = json.loads(resources.files("coiso").joinpath("data", "mf_tables.json").read_text())
    data["rows"][0]["scalar_rule"] = "maybe"
    p = tmp_path / "mf_tables.json"
    p.write_text(json.dumps(data))
    with pytest.raises(ValueError):
        load_table(p)


@pytest.mark.parametrize("rid", [e.id for e in table_rows() if e.table == "Ia"])
def test_table_Ia_numeric_true(rid):
    inst = smallest_instances(ROWS[rid])
    assert inst, f"{rid} has no instance with dim <= 40"
    for env, m in inst:
        assert numeric_mf_check(m), (rid, env)
        assert match_mf(m).scalar_verdict == MF


@pytest.mark.parametrize("rid", [e.id for e in table_rows() if e.table == "Ib"])
def test_table_Ib_without_scalars(rid):
    for env, m in smallest_instances(ROWS[rid], max_dim=64):
        bare = ModuleExpr(type(m.algebra)(m.algebra.ideals, 0),
                          [Term(t.factors, ()) for t in m.summands()])
        assert numeric_mf_check(bare), (rid, env)
        assert match_mf(bare).scalar_verdict == MF


@pytest.mark.parametrize("rid", [e.id for e in table_rows() if e.table == "Ib"])
def test_Ib_within_Ia(rid):
    for env, m in smallest_instances(ROWS[rid], count=3, max_dim=200):
        (block,) = _blocks(m)
        ideals, shapes = _block_shape(m, block)
        assert _match_block(ideals, shapes, ("Ia",)) is not None, (rid, env)


@pytest.mark.parametrize("rid", [e.id for e in table_rows() if e.table in ("IIa", "IIb")])
def test_table_II_full_scalars(rid):
    for env, m in smallest_instances(ROWS[rid], count=1, max_dim=64):
        assert match_mf(m).scalar_verdict == MF
        assert numeric_mf_check(m), (rid, env)


@pytest.mark.parametrize("rid", [e.id for e in table_rows() if e.table == "IIb"])
def test_table_IIb_needs_both_scalars(rid):
    for env, m in smallest_instances(ROWS[rid], count=1, max_dim=64):
        one = [(1, 1)]
        bare = ModuleExpr(type(m.algebra)(m.algebra.ideals, 0), [Term(t.factors, ()) for t in m.summands()])
        assert match_mf(bare, one).scalar_verdict == MF_MORE_SCALARS
        diag = [np.ones(m.dim)]
        assert not numeric_mf_check(bare, diag), (rid, env)


@pytest.mark.parametrize("text", CATALOGUED_NEGATIVES)
def test_catalogued_negatives(text):
    m = parse_module(text)
    assert match_mf(m).scalar_verdict == NOT_MF
    if m.dim <= 64:
        assert not numeric_mf_check(m)


def test_twenty_negatives():
    assert len(CATALOGUED_NEGATIVES) == 20


def test_tensor_product_removable():
    for k, m in [(2, 3), (2, 5), (3, 4)]:
        e = parse_module(f"su{k}:L1 * su{m}:L1", scalars="none")
        assert match_mf(e).scalar_verdict == MF


def test_u3_on_c3_plus_lambda2():
    e = parse_module("su3:L1 (1) + su3:L2 (2)")
    assert match_mf(e).scalar_verdict == MF
    assert numeric_mf_check(e)
    # the excluded charge ratio a = -b
    bad = parse_module("su3:L1 (1) + su3:L2 (-1)")
    assert match_mf(bad).scalar_verdict == MF_MORE_SCALARS
    assert not numeric_mf_check(bad)


def test_su2_diagonal_needs_scalars():
    e = parse_module("su2:L1 + su2:L1", scalars="none")
    assert match_mf(e).scalar_verdict == MF_MORE_SCALARS
    assert not numeric_mf_check(e)


def test_numeric_examples():
    # u(2) acting diagonally on C^2 + C^2
    assert not numeric_mf_check(parse_module("su2:L1 (1) + su2:L1 (1)"))
    # u(1)^2 x su(2) x su(2)
    assert numeric_mf_check(parse_module("su2#1:L1 + su2#2:L1"))
    # su(2) x sp(2) with scalars
    assert numeric_mf_check(parse_module("su2:L1 * sp2:L1"))


def test_sl_w_tensor_not_mf():
    e = parse_module("su2#1:2L1 * su2#2:L1 * su3:L1")
    assert match_mf(e).scalar_verdict == NOT_MF


def test_decomposable_blocks():
    e = parse_module("su3:L1 + su4:L1* * su2:L1")
    res = match_mf(e)
    assert res.scalar_verdict == MF and len(res.blocks) == 2


def test_numeric_accepts_matrices():
    from coiso.embeddings import realize
    gens = realize("sp:2").generators
    assert numeric_mf_check(gens, [np.ones(4)])
    with pytest.raises(ValueError):
        numeric_mf_check([np.zeros((70, 70))])


def test_parse_module_errors():
    with pytest.raises(ValueError):
        parse_module("xx3:L1")
    with pytest.raises(ValueError):
        parse_module("su3:L1 * su3:L1")


MF_SAMPLES = ["su3:L1 (1) + su3:L2 (2)", "su4:L1 * su2:L1", "su2#1:L1 + su2#2:L1",
              "su3:L1 * su2#1:L1 + su2#1:L1 * su4:L1", "sp2:L1 + sp2:L1",
              "su5:L2 + su5:L1", "su3:2L1", "su2:L1 + su2:L1"]


def _shuffled(text, rng):
    parts = [p.strip() for p in text.split("+")]
    rng.shuffle(parts)
    out = []
    for p in parts:
        facs, _, charge = p.partition(" (")
        fs = [f.strip() for f in facs.split("*")]
        rng.shuffle(fs)
        out.append(" * ".join(fs) + (f" ({charge}" if charge else ""))
    return " + ".join(out)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(MF_SAMPLES), st.randoms(use_true_random=False))
def test_match_invariant_under_permutation(text, rng):
    base = match_mf(parse_module(text)).scalar_verdict
    assert match_mf(parse_module(_shuffled(text, rng))).scalar_verdict == base


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(MF_SAMPLES + list(CATALOGUED_NEGATIVES[:8])))
def test_match_invariant_under_dualization(text):
    m = parse_module(text)
    assert match_mf(m.dual()).scalar_verdict == match_mf(m).scalar_verdict


def test_match_result_substitution_admitted():
    res = match_mf(parse_module("su4:L1 * su2:L1"))
    assert res.matched and res.entry.admits(res.substitution)
