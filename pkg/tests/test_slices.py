"""Slices at complex orbits, checked against the honest tangent-space restriction."""

import pytest

from coiso.embeddings import realize
from coiso.mftables import MF, match_mf
from coiso.slices import SliceError, cross_check_slice, default_split, slice_at_complex_orbit

from helpers import grid_slices

SLICES, SKIPPED = grid_slices()


def describe(label, k, split=None):
    return slice_at_complex_orbit(realize(label), k, split=split).describe()


def test_grid_is_covered():
    assert len(SLICES) > 300
    # only the outer tensor products with an orthogonal factor have no catalogued slice
    assert {lab.split("(")[0] for lab, _, _ in SKIPPED} <= {"tensor"}


@pytest.mark.parametrize("idx", range(len(SLICES)))
def test_slice_matches_tangent_character(idx):
    e, k, res = SLICES[idx]
    check = cross_check_slice(e, res)
    assert check["agree"], (e.label, k, res.split, check)


def test_fixed_point_orbit_of_su_l_block():
    d = describe("block(su:4,su:3)", 2, (2, 0))
    assert d["slice"] == "C^2 (x) C^3[-1]"
    assert d["stabilizer"] == "su(2) + su(2) + su(3) + u(1)"


def test_transitive_slice_is_zero():
    assert describe("su:5", 2)["slice"] == "0"


def test_sp_slice_lambda2_pi_dual():
    assert describe("block(sp:3,triv:1)", 2)["slice"] == "C[-2] + C^2[-1]"
    assert describe("block(sp:3,triv:1)", 3)["slice"] == "C^3*[-1] + C^3[-2]"
    d = describe("sp:3", 3)
    assert d["slice"] == "C^3[-2]"


def test_so5_slice():
    assert describe("so:5", 2)["slice"] == "S2(C^2)[-2]"


def test_tensor_slice_contains_sl_w_summand():
    d = describe("tensor(3,3)", 2)
    assert "S2(C^2) (x) C^2" in d["slice"]


def test_spin7_totally_real_orbit():
    e = realize("spin7")
    res = slice_at_complex_orbit(e, 2)
    assert res.totally_real and res.family == "totally-real"
    assert cross_check_slice(e, res)["agree"]


def test_family_mismatch_raises():
    with pytest.raises(SliceError):
        slice_at_complex_orbit(realize("spin7"), 2, family="block")
    with pytest.raises(SliceError):
        slice_at_complex_orbit(realize("tensor(so:3,sp:1)"), 2)


def test_default_split_is_deterministic():
    e = realize("block(su:3,su:2,su:3)")
    assert default_split(e.blocks, 2) == default_split(e.blocks, 2)
    assert sum(default_split(e.blocks, 2)) == 2


def test_slice_of_coisotropic_family_is_mf():
    res = slice_at_complex_orbit(realize("block(sp:2,su:5)"), 4)
    assert match_mf(res.slice).scalar_verdict == MF
