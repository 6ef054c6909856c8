"""Coisotropic and polar actions of compact groups on complex Grassmannians.

The main entry points are

- :func:`classify_action`: coisotropy verdict with a certificate from the
  symbolic slice engine and the numeric rank oracle;
- :func:`polar_check`: polarity and hyperpolarity verdicts;
- :func:`match_mf` and :func:`numeric_mf_check`: multiplicity freeness of
  modules;
- :func:`lookup_tableV`, :func:`castle` and :func:`reduce`: prehomogeneous
  triplets and castling;
- :func:`regenerate_tables` and :func:`regenerate_polar_table`: bounded
  regeneration of the classification tables.
"""

from .classify import EngineDisagreement, classify_action, regenerate_tables
from .lie import (
    HighestWeight,
    SimpleAlgebraId,
    admissible_A_irreps,
    borel_dim,
    dimensional_filter,
    parse_algebra,
    weyl_dim,
)
from .mftables import match_mf, numeric_mf_check, parse_module
from .oracle import ActionInstance, DegenerateNumericsError, Verdict, numeric_cohomogeneity
from .polar import PolarVerdict, lie_triple_test, polar_check, regenerate_polar_table
from .preho import Triplet, castle, lookup_tableV, numeric_preho_check, parse_triplet, reduce
from .slices import slice_at_complex_orbit

__version__ = "0.1.0"

__all__ = [
    "ActionInstance",
    "DegenerateNumericsError",
    "EngineDisagreement",
    "HighestWeight",
    "PolarVerdict",
    "SimpleAlgebraId",
    "Triplet",
    "Verdict",
    "admissible_A_irreps",
    "borel_dim",
    "castle",
    "classify_action",
    "dimensional_filter",
    "lie_triple_test",
    "lookup_tableV",
    "match_mf",
    "numeric_cohomogeneity",
    "numeric_mf_check",
    "numeric_preho_check",
    "parse_algebra",
    "parse_module",
    "parse_triplet",
    "polar_check",
    "reduce",
    "regenerate_polar_table",
    "regenerate_tables",
    "slice_at_complex_orbit",
    "weyl_dim",
]
