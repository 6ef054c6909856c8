"""Matrix realizations of the catalog embeddings."""

from fractions import Fraction

import numpy as np
import pytest

from coiso.catalog import catalog_rows
from coiso.embeddings import (
    LabelError,
    MatrixEmbedding,
    ScalarLine,
    parse_label,
    primitive_vector,
    realize,
    realize_scalar_line,
    verify_embedding,
)
from coiso.modules import char_decompose
from coiso.embeddings import ambient_character


def catalog_labels(n_max=10):
    seen = {}
    for row in catalog_rows():
        for ins in row.instances(n_max):
            seen.setdefault(ins.label, row.id)
    return sorted(seen)


LABELS = catalog_labels()


@pytest.mark.parametrize("label", LABELS)
def test_catalog_labels_verify(label):
    rep = verify_embedding(realize(label), tol=1e-10)
    assert rep.ok, rep.failures


def test_block_su2_su2_center():
    e = realize("block(su:2,su:2;z)")
    assert e.n == 4
    assert len(e.generators) == 7
    assert e.abstract.rank == 3


def test_spin7():
    e = realize("spin7")
    assert (e.n, e.dim) == (8, 21)
    rep = verify_embedding(e)
    assert rep.ok and rep.rank == 3
    # irreducible on C^8
    mod = char_decompose(ambient_character(e), e.abstract)
    assert len(mod.terms) == 1 and mod.dim == 8


def test_tensor_3_3():
    e = realize("tensor(3,3)")
    assert (e.n, e.dim) == (9, 16)


def test_sp2():
    rep = verify_embedding(realize("sp:2"))
    assert rep.ok and rep.dim == 10 and rep.rank == 2


def test_zeroed_generator_reported():
    e = realize("sp:2")
    gens = [g.copy() for g in e.generators]
    gens[3] = np.zeros_like(gens[3])
    broken = MatrixEmbedding(e.n, gens, e.abstract, "broken")
    rep = verify_embedding(broken)
    assert not rep.ok
    assert any("span" in f or "bracket" in f for f in rep.failures)


def test_non_antihermitian_reported():
    e = realize("su:3")
    gens = [g.copy() for g in e.generators]
    gens[0] = gens[0] + np.eye(3)
    rep = verify_embedding(MatrixEmbedding(3, gens, e.abstract, "broken"))
    assert any("anti-Hermitian" in f for f in rep.failures)


def test_dimension_mismatch():
    with pytest.raises(LabelError):
        realize("sp:3", 7)
    assert realize("sp:3", 6).n == 6


@pytest.mark.parametrize("bad", ["bogus", "block(zz:2)", "block(sp:0)", "block(su:3;q)", "tensor(3)", "block(su:x)"])
def test_unknown_labels(bad):
    with pytest.raises(LabelError):
        realize(bad)


def test_parse_label_grammar():
    spec = parse_label("block(su:3;su:3)")
    assert spec["kind"] == "block"
    assert parse_label("block(su:3,su:3)")["kind"] == "block"
    assert parse_label("spin7")["kind"] == "spin7"


def test_generators_deterministic():
    a = realize("block(sp:2,su:3;z)")
    b = realize("block(sp:2,su:3;z)")
    for x, y in zip(a.generators, b.generators):
        assert np.array_equal(x, y)


def test_primitive_vector():
    assert primitive_vector([Fraction(1, 2), Fraction(-1, 3), 0]) == (3, -2, 0)
    assert primitive_vector([4, -6]) == (2, -3)


@pytest.mark.parametrize("n", [7, 8, 9, 10, 12])
def test_line_slope_n_over_n_minus_2(n):
    """The excluded line of the su(2)+su(2)+su(n-4) family is the centralizer of su(4)+su(n-4)."""
    z = [Fraction(-1, 2), Fraction(1, n - 2), Fraction(1, n - 2)]
    r = [0, Fraction(-1, 2), Fraction(1, n - 4)]
    line = realize_scalar_line(([2, 2, n - 4], z, r), Fraction(n, n - 2))
    expect = primitive_vector([-(n - 4)] * 4 + [4] * (n - 4))
    assert line.charges in (expect, tuple(-c for c in expect))


def test_line_slope_zero_is_center_axis():
    z, r = [Fraction(-1, 2), Fraction(1, 4)], [Fraction(1, 2), Fraction(-1, 4)]
    assert realize_scalar_line(([2, 4], z, r), 0).charges == realize_scalar_line(([2, 4], z, r), "center").charges
    assert realize_scalar_line(([2, 4], z, r), 0).charges == (-2, -2, 1, 1, 1, 1)


def test_line_rejects_float_and_symbols():
    data = ([2, 2], [1, -1], [0, 0])
    with pytest.raises(LabelError):
        realize_scalar_line(data, 0.5)
    with pytest.raises(LabelError):
        realize_scalar_line(data, "generic")


def test_scalar_line_trace_free():
    with pytest.raises(ValueError):
        ScalarLine(Fraction(1), (1, 1))


def test_line_commutes_with_semisimple_part():
    e = realize("block(su:2,su:2,su:4;line(u(-1/2|1/6|1/6),u(0|-1/2|1/4),slope=7/3))")
    d = e.generators[-1]
    for g in e.generators[:-1]:
        assert np.allclose(d @ g, g @ d)
    assert abs(np.trace(d)) < 1e-12


@pytest.mark.parametrize("label", ["so:5", "sp:3", "spin7", "g2", "tensor(2,3)", "block(su:2,sp:2;z)"])
def test_numeric_rank_matches_abstract(label):
    e = realize(label)
    assert verify_embedding(e, seed=5).rank == e.abstract.rank
