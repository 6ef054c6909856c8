"""Instance sweeps shared by several test modules."""

from coiso.catalog import catalog_rows
from coiso.polar import _splits
from coiso.slices import SliceError, slice_at_complex_orbit

SLICE_GRID = {(2, 5), (2, 6), (3, 6), (2, 8), (4, 8)}


def grid_slices(grid=SLICE_GRID):
    """Every (embedding, k, slice) the slice pipeline returns on the catalog over ``grid``.

    All complex orbits reachable by distributing k over the blocks are used.
    Families without a catalogued slice are collected separately.
    """
    seen, out, skipped = set(), [], []
    for row in catalog_rows():
        for ins in row.instances(max(n for _, n in grid)):
            if (ins.k, ins.n) not in grid or (ins.label, ins.k) in seen:
                continue
            seen.add((ins.label, ins.k))
            e = ins.action.embedding
            for split in list(_splits(e, ins.k)) or [None]:
                try:
                    out.append((e, ins.k, slice_at_complex_orbit(e, ins.k, split=split)))
                except SliceError as exc:
                    skipped.append((ins.label, ins.k, str(exc)))
    return out, skipped
