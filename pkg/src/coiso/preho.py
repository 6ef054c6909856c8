"""Prehomogeneous triplets, castling transforms and reduced triplets.

A triplet (G, rho, V) is prehomogeneous when G has a Zariski dense orbit on
V.  Two triplets are castling transforms of each other when one is
(G~ x SL(n), rho~ (x) L1, V(m) (x) V(n)) and the other
(G~ x SL(m-n), rho~* (x) L1, V(m)* (x) V(m-n)); castling preserves
prehomogeneity.  A triplet is reduced when no castling lowers its dimension.

Triplets are stored as a single irreducible term over a reductive algebra.
Each GL factor contributes one abelian generator; pure GL(1) twists are not
tracked because they do not change the image of the group.

A group H acting on C^n has an open orbit on Gr(k, n) exactly when
H x GL(k) has one on C^n (x) C^k; ``grassmann_open_orbit`` uses this.
"""

from __future__ import annotations

import itertools
import json
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .lie import HighestWeight, ReductiveAlgebra, SimpleAlgebraId, dual_weight, weyl_dim
from .mftables import (Variant, _automorphisms, _apply, _compare, _data_path, _ideal_from_name,
                       _weight_token, canonical_ideal, instantiate)
from .modules import ModuleExpr, Term
from .numerics import DEFAULT_TOL, numeric_rank
from .safeexpr import evaluate, names

__all__ = [
    "Triplet", "CastlingError", "TableVRow", "castle", "reduce", "lookup_tableV", "table_v_rows",
    "numeric_preho_check", "numeric_preho_rank", "grassmann_open_orbit", "parse_triplet",
    "grassmann_triplet",
]

log = logging.getLogger(__name__)

MAX_DIM = 128


class CastlingError(ValueError):
    """The triplet has no factor that can be castled in the requested way."""


@dataclass(frozen=True)
class Triplet:
    """(G, rho, V) with rho irreducible: one weight per simple ideal of G.

    ``weights[i]`` is the highest weight of the factor on ideal ``i`` (zero
    means the ideal acts trivially and should not be present).  ``scalars``
    counts GL(1) factors; any positive number gives the same image.
    """

    ideals: tuple[SimpleAlgebraId, ...]
    weights: tuple[HighestWeight, ...]
    scalars: int = 1

    def __post_init__(self):
        if len(self.ideals) != len(self.weights):
            raise ValueError("one weight per ideal is required")
        for a, w in zip(self.ideals, self.weights):
            if w.rank != a.rank:
                raise ValueError(f"weight {w} does not fit {a}")
            if w.is_zero():
                raise ValueError("trivially acting ideals are not allowed in a triplet")

    @property
    def group(self) -> ReductiveAlgebra:
        return ReductiveAlgebra(self.ideals, self.scalars)

    @property
    def rep(self) -> ModuleExpr:
        return ModuleExpr(self.group, [Term(tuple((w,) for w in self.weights), (1,) * self.scalars)])

    @property
    def space_dim(self) -> int:
        d = 1
        for a, w in zip(self.ideals, self.weights):
            d *= weyl_dim(a, w)
        return d

    def factor_dims(self) -> list[int]:
        return [weyl_dim(a, w) for a, w in zip(self.ideals, self.weights)]

    def key(self) -> tuple:
        """Normal form up to equivalence (ideal automorphisms, ordering)."""
        facs = []
        for a, w in zip(self.ideals, self.weights):
            a, w = canonical_ideal(a, w)
            best = min(_apply(p, w).coeffs for p in _automorphisms(a))
            facs.append((a.series, a.rank, best))
        return (tuple(sorted(facs)), self.scalars > 0)

    def equivalent(self, other: "Triplet") -> bool:
        return self.key() == other.key()

    def describe(self) -> str:
        from .modules import irrep_symbol
        parts = [f"{a.compact_name}:{irrep_symbol(a, w)}" for a, w in zip(self.ideals, self.weights)]
        gl = [f"GL(1)^{self.scalars}"] if self.scalars > 1 else (["GL(1)"] if self.scalars else [])
        return " x ".join(gl + parts) + f" on C^{self.space_dim}"

    def __str__(self):
        return self.describe()


def _is_defining(a: SimpleAlgebraId, w: HighestWeight) -> bool:
    return a.series == "A" and (w == HighestWeight.fundamental(a.rank, 1)
                                or w == HighestWeight.fundamental(a.rank, a.rank))


def castlable_factors(t: Triplet) -> list[int]:
    """Indices of SL(n) factors acting by L1 (or its dual) with m > n."""
    total = t.space_dim
    out = []
    for i, (a, w) in enumerate(zip(t.ideals, t.weights)):
        if _is_defining(a, w):
            n = a.rank + 1
            if total // n > n:
                out.append(i)
    return out


def castle(t: Triplet, direction: int | str | None = None) -> Triplet:
    """Castling transform.

    ``direction`` is the index of an SL(n) factor acting by its defining
    module (V = V(m) (x) V(n) with m > n), or ``"grow"`` for n = 1, which
    adjoins a new SL(m-1) factor.  By default the first castlable factor is used.
    """
    if direction is None:
        cands = castlable_factors(t)
        if not cands:
            raise CastlingError(f"no castlable SL factor in {t}")
        direction = cands[0]
    if direction == "grow":
        m = t.space_dim
        if m < 2:
            raise CastlingError("castling with n = 1 needs dim V >= 2")
        rest = [(a, dual_weight(a, w)) for a, w in zip(t.ideals, t.weights)]
        if m - 1 >= 2:
            rest.append((SimpleAlgebraId("A", m - 2), HighestWeight.fundamental(m - 2, 1)))
        return Triplet(tuple(a for a, _ in rest), tuple(w for _, w in rest), max(t.scalars, 1))
    i = int(direction)
    if not 0 <= i < len(t.ideals):
        raise CastlingError(f"factor index {i} out of range")
    a, w = t.ideals[i], t.weights[i]
    if not _is_defining(a, w):
        raise CastlingError(f"factor {i} is not SL(n) acting by its defining module")
    n = a.rank + 1
    m = t.space_dim // n
    if not m > n:
        raise CastlingError(f"castling needs m > n, got m={m}, n={n}")
    ideals, weights = [], []
    for j, (b, v) in enumerate(zip(t.ideals, t.weights)):
        if j == i:
            if m - n >= 2:
                ideals.append(SimpleAlgebraId("A", m - n - 1))
                weights.append(HighestWeight.fundamental(m - n - 1, 1))
            continue
        ideals.append(b)
        weights.append(dual_weight(b, v))
    return Triplet(tuple(ideals), tuple(weights), t.scalars)


def castled_dim(t: Triplet, i: int) -> int:
    n = t.ideals[i].rank + 1
    m = t.space_dim // n
    return m * (m - n)


def reduce(t: Triplet, max_steps: int = 64) -> Triplet:
    """Castle while the dimension strictly decreases."""
    for _ in range(max_steps):
        best = None
        for i in castlable_factors(t):
            d = castled_dim(t, i)
            if d < t.space_dim and (best is None or d < best[0]):
                best = (d, i)
        if best is None:
            return t
        t = castle(t, best[1])
    raise RuntimeError("reduction did not terminate")


def is_reduced(t: Triplet) -> bool:
    return all(castled_dim(t, i) >= t.space_dim for i in castlable_factors(t))


# -- Table V --------------------------------------------------------------------------

@dataclass(frozen=True)
class TableVRow:
    id: str
    display: str
    params: tuple[str, ...]
    constraints: str
    variants: tuple[Variant, ...]
    printed_space: str
    flags: tuple[str, ...] = ()
    note: str = ""
    table: str = "V"
    scalar_rule: str = "required"

    def admits(self, binding: Mapping[str, int]) -> bool:
        return bool(evaluate(self.constraints, binding))

    @property
    def source(self) -> str:
        return f"Table V, row {self.id.split('-')[1]}"

    def to_dict(self) -> dict:
        d = {"id": self.id, "table": self.table, "display": self.display, "params": list(self.params),
             "constraints": self.constraints,
             "variants": [{"ideals": dict(v.ideals), "summands": [dict(s) for s in v.summands],
                           "when": v.when} for v in self.variants],
             "scalar_rule": self.scalar_rule, "printed_space": self.printed_space,
             "flags": list(self.flags)}
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "TableVRow":
        variants = tuple(Variant(tuple(v["ideals"].items()),
                                 tuple(tuple(s.items()) for s in v["summands"]),
                                 v.get("when", "True")) for v in d["variants"])
        row = cls(d["id"], d["display"], tuple(d["params"]), d["constraints"], variants,
                  d["printed_space"], tuple(d.get("flags", ())), d.get("note", ""))
        for text in [row.constraints] + [v.when for v in variants]:
            extra = names(text) - set(row.params)
            if extra:
                raise ValueError(f"{row.id}: unknown names {sorted(extra)}")
        if any(len(v.summands) != 1 for v in variants):
            raise ValueError(f"{row.id}: triplets are irreducible")
        return row

    def triplet(self, binding: Mapping[str, int]) -> Triplet | None:
        inst = instantiate(self, binding)
        if inst is None:
            return None
        amap = dict(inst.ideals)
        s = dict(inst.summands[0])
        return Triplet(tuple(amap[k] for k in amap), tuple(s[k] for k in amap), 1)


def load_table_v(path=None) -> tuple[TableVRow, ...]:
    p = path if path is not None else _data_path("table_v.json")
    with open(p, encoding="utf-8") as fh:
        raw = json.load(fh)
    if raw.get("schema") != 1:
        raise ValueError(f"unsupported schema {raw.get('schema')!r} in {p}")
    return tuple(TableVRow.from_dict(r) for r in raw["rows"])


def dump_table_v(rows: Sequence[TableVRow]) -> str:
    return json.dumps({"schema": 1, "rows": [r.to_dict() for r in rows]}, indent=1,
                      ensure_ascii=False) + "\n"


@lru_cache(maxsize=1)
def table_v_rows() -> tuple[TableVRow, ...]:
    return load_table_v()


def lookup_tableV(t: Triplet) -> tuple[TableVRow, dict[str, int]] | None:
    """Row of Table V equivalent to ``t`` (which should be reduced), or None."""
    if t.scalars < 1:
        return None
    ideals = {}
    shape = {}
    for i, (a, w) in enumerate(zip(t.ideals, t.weights)):
        a, w = canonical_ideal(a, w)
        ideals[i], shape[i] = a, w
    sig = sorted((a.series, a.rank) for a in ideals.values())
    top = max((a.rank for a in ideals.values()), default=1)
    for row in table_v_rows():
        # orthogonal rows have n close to twice the rank
        for binding in itertools.product(range(0, 2 * top + 4), repeat=len(row.params)):
            env = dict(zip(row.params, binding))
            try:
                inst = instantiate(row, env)
            except (ValueError, ZeroDivisionError):
                continue
            if inst is None:
                continue
            pat = sorted(canonical_ideal(a, HighestWeight.zero(a.rank))[0] for _, a in inst.ideals)
            if sorted((a.series, a.rank) for a in pat) != sig:
                continue
            if _compare(ideals, [shape], inst) is not None:
                return row, env
    return None


# -- numerics -------------------------------------------------------------------------

def numeric_preho_rank(gens: Sequence[np.ndarray], trials: int = 8, seed: int = 0,
                       tol: float = DEFAULT_TOL) -> tuple[int, list[int]]:
    """Generic complex orbit dimension: rank of {X v} over random v."""
    rng = np.random.default_rng(seed)
    n = gens[0].shape[0]
    g = np.array(gens)
    ranks = []
    for _ in range(trials):
        v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        m = (g @ v).T
        ranks.append(numeric_rank(np.vstack([np.hstack([m.real, -m.imag]), np.hstack([m.imag, m.real])]),
                                  tol) // 2)
    if len(set(ranks)) > 1:
        log.info("orbit ranks varied across samples: %s", ranks)
    return max(ranks), ranks


def _generators(rep) -> list[np.ndarray]:
    if isinstance(rep, Triplet):
        rep = rep.rep
    if isinstance(rep, ModuleExpr):
        from .reps import module_generators
        return module_generators(rep)
    return [np.asarray(x, dtype=complex) for x in rep]


def numeric_preho_check(rep, trials: int = 8, seed: int = 0, tol: float = DEFAULT_TOL) -> bool:
    """True when a random point has an orbit of full dimension.

    ``rep`` is a Triplet, a ModuleExpr (its abelian part gives the scalars) or
    a list of matrices spanning the Lie algebra on V.
    """
    gens = _generators(rep)
    n = gens[0].shape[0]
    if n > MAX_DIM:
        raise ValueError(f"dim V = {n} exceeds the bound {MAX_DIM}")
    r, _ = numeric_preho_rank(gens, trials, seed, tol)
    return r == n


def grassmann_triplet(ideals: Sequence[SimpleAlgebraId], weights: Sequence[HighestWeight],
                      k: int) -> Triplet:
    """(H x GL(k), rho (x) L1, C^n (x) C^k) for irreducible rho of H."""
    ideals = list(ideals)
    weights = list(weights)
    if k >= 2:
        ideals.append(SimpleAlgebraId("A", k - 1))
        weights.append(HighestWeight.fundamental(k - 1, 1))
    return Triplet(tuple(ideals), tuple(weights), 1)


def grassmann_open_orbit(embedding, k: int, n: int | None = None, *, trials: int = 8,
                         seed: int = 0) -> bool:
    """Does H (a MatrixEmbedding or a simple irreducible (ideal, weight)) have an
    open orbit on Gr(k, n)?

    For a simple non-A ideal acting irreducibly the triplet is already reduced
    and Table V decides.  Otherwise the generic rank of H x GL(k) on
    C^n (x) C^k is computed.
    """
    if isinstance(embedding, tuple):
        a, w = embedding
        n_ = weyl_dim(a, w)
        n = n or n_
        if not 2 <= k <= n / 2:
            raise ValueError("need 2 <= k <= n/2")
        t = grassmann_triplet([a], [w], k)
        if a.series != "A":
            return lookup_tableV(reduce(t)) is not None
        return numeric_preho_check(t, trials, seed)
    e = embedding
    n = e.n
    if not 2 <= k <= n / 2:
        raise ValueError("need 2 <= k <= n/2")
    ideals = [a for a in e.abstract.ideals] if hasattr(e, "abstract") else []
    simple_irreducible = (len(ideals) == 1 and e.abstract.abelian_rank == 0
                          and ideals[0].series != "A" and _irreducible_weight(e) is not None)
    if simple_irreducible:
        t = grassmann_triplet(ideals, [_irreducible_weight(e)], k)
        return lookup_tableV(reduce(t)) is not None
    gens = [np.kron(x, np.eye(k)) for x in e.generators]
    gens += [np.kron(np.eye(n), y) for y in _gl_generators(k)]
    return numeric_preho_check(gens, trials, seed)


def _gl_generators(k: int) -> list[np.ndarray]:
    out = []
    for i in range(k):
        for j in range(k):
            m = np.zeros((k, k), complex)
            m[i, j] = 1
            out.append(m)
    return out


def _irreducible_weight(e) -> HighestWeight | None:
    from .embeddings import ambient_character
    from .modules import char_decompose
    if e.weights is None:
        # the only catalog embedding without a recorded torus is G2 on C^7
        return HighestWeight((1, 0)) if e.kind == "g2" else None
    expr = char_decompose(ambient_character(e), e.abstract)
    summ = expr.summands()
    if len(summ) != 1 or len(summ[0].factors[0]) != 1:
        return None
    return summ[0].factors[0][0]


# -- text -----------------------------------------------------------------------------

def parse_triplet(text: str) -> Triplet:
    """Parse ``"spin7:L3 * gl2:L1"`` or ``"gl1 * sp3:L3"``.

    ``glN`` is SL(N) with its own scalar, ``gl1`` a lone scalar; other names
    are as in the module syntax of the MF layer (su, sp, so, spin, g2, e6, e7).
    """
    ideals, weights = [], []
    scalars = 0
    for f in [x.strip() for x in text.split("*") if x.strip()]:
        name, _, w = f.partition(":")
        name = name.strip().lower()
        m = re.fullmatch(r"(gl|sl)\(?(\d+)\)?", name)
        if m:
            size = int(m.group(2))
            if m.group(1) == "gl":
                scalars += 1
            if size >= 2:
                a = SimpleAlgebraId("A", size - 1)
                ideals.append(a)
                weights.append(_weight_token(w or "L1", a))
            continue
        a = _ideal_from_name(name)
        ideals.append(a)
        weights.append(_weight_token(w or "L1", a))
    return Triplet(tuple(ideals), tuple(weights), scalars)
