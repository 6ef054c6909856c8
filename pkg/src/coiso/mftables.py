"""Tables of multiplicity free representations and matching against them.

A complex representation V of a compact Lie algebra k (semisimple part plus
scalars) is multiplicity free when the polynomial ring C[V] decomposes without
multiplicities.  Irreducible cases with full scalars form Table Ia, those in
which the scalars can be dropped form Table Ib.  Indecomposable sums of two
irreducibles form Table IIa (one scalar suffices under a condition on its
charges) and Table IIb (both scalars needed).  One IIa row needs no scalars at all.

``match_mf`` decides a module given in normal form, including decomposable
sums: the module is split into blocks connected through shared simple ideals.
A block with more than two summands is never multiplicity free.  Each
matched block contributes the subspace of charge directions it does not need
(all of them when the scalars can be dropped, nothing for Ia and IIb, the bad
direction for the other IIa rows),
and the module is multiplicity free exactly when the charge columns together
with those subspaces span all summand directions.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .lie import HighestWeight, ReductiveAlgebra, SimpleAlgebraId, dual_weight
from .modules import ModuleExpr, Term
from .numerics import DEFAULT_TOL, exact_rank
from .safeexpr import evaluate, names

__all__ = [
    "MFEntry", "MatchResult", "BlockMatch", "load_table", "dump_table", "table_rows", "match_mf",
    "numeric_mf_check", "numeric_mf_result", "instantiate", "canonical_ideal",
    "MF", "MF_MORE_SCALARS", "NOT_MF", "parse_module", "CATALOGUED_NEGATIVES",
]

MF = "MF-with-given-scalars"
MF_MORE_SCALARS = "MF-only-with-more-scalars"
NOT_MF = "not-MF"

DATA_ENV = "COISO_DATA_DIR"


# -- database ------------------------------------------------------------------

@dataclass(frozen=True)
class Variant:
    ideals: tuple[tuple[str, str], ...]
    summands: tuple[tuple[tuple[str, str], ...], ...]
    when: str


@dataclass(frozen=True)
class MFEntry:
    """One table row: a parametrized family of modules with its scalar rule."""

    id: str
    table: str
    display: str
    params: tuple[str, ...]
    constraints: str
    variants: tuple[Variant, ...]
    scalar_rule: str
    condition: str | None = None
    bad_direction: tuple[str, ...] | None = None
    flags: tuple[str, ...] = ()
    note: str = ""

    @property
    def source(self) -> str:
        return f"Table {self.table}, row {self.id.split('-')[1]}"

    def admits(self, binding: Mapping[str, int]) -> bool:
        return bool(evaluate(self.constraints, binding))

    def to_dict(self) -> dict:
        d: dict[str, Any] = {
            "id": self.id, "table": self.table, "display": self.display, "params": list(self.params),
            "constraints": self.constraints,
            "variants": [{"ideals": dict(v.ideals), "summands": [dict(s) for s in v.summands],
                          "when": v.when} for v in self.variants],
            "scalar_rule": self.scalar_rule}
        if self.condition is not None:
            d["condition"] = self.condition
        if self.bad_direction is not None:
            d["bad_direction"] = list(self.bad_direction)
        d["flags"] = list(self.flags)
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "MFEntry":
        variants = tuple(Variant(tuple(v["ideals"].items()),
                                 tuple(tuple(s.items()) for s in v["summands"]),
                                 v.get("when", "True")) for v in d["variants"])
        bad = d.get("bad_direction")
        entry = cls(d["id"], d["table"], d["display"], tuple(d["params"]), d["constraints"], variants,
                    d["scalar_rule"], d.get("condition"),
                    tuple(str(x) for x in bad) if bad is not None else None,
                    tuple(d.get("flags", ())), d.get("note", ""))
        entry.validate()
        return entry

    def validate(self):
        if self.table not in ("Ia", "Ib", "IIa", "IIb"):
            raise ValueError(f"{self.id}: unknown table {self.table}")
        if self.scalar_rule not in ("required", "removable", "reducible"):
            raise ValueError(f"{self.id}: unknown scalar rule {self.scalar_rule}")
        allowed = set(self.params)
        for text in [self.constraints] + [v.when for v in self.variants]:
            extra = names(text) - allowed
            if extra:
                raise ValueError(f"{self.id}: unknown names {sorted(extra)} in {text!r}")
        if self.scalar_rule == "reducible":
            if self.condition is None or self.bad_direction is None:
                raise ValueError(f"{self.id}: reducible rows need a condition and a bad direction")
        n_summands = {len(v.summands) for v in self.variants}
        expected = {1} if self.table in ("Ia", "Ib") else {2}
        if n_summands != expected:
            raise ValueError(f"{self.id}: wrong summand count {n_summands}")


def _data_path(name: str):
    override = os.environ.get(DATA_ENV)
    if override:
        return os.path.join(override, name)
    return resources.files("coiso").joinpath("data", name)


def load_table(path=None) -> tuple[MFEntry, ...]:
    """Load and validate the table database."""
    p = path if path is not None else _data_path("mf_tables.json")
    with open(p, encoding="utf-8") as fh:
        raw = json.load(fh)
    if raw.get("schema") != 1:
        raise ValueError(f"unsupported schema {raw.get('schema')!r} in {p}")
    entries = tuple(MFEntry.from_dict(r) for r in raw["rows"])
    ids = [e.id for e in entries]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate row ids")
    return entries


def dump_table(entries: Sequence[MFEntry]) -> str:
    return json.dumps({"schema": 1, "rows": [e.to_dict() for e in entries]}, indent=1,
                      ensure_ascii=False) + "\n"


@lru_cache(maxsize=1)
def table_rows() -> tuple[MFEntry, ...]:
    return load_table()


# -- pattern instantiation ------------------------------------------------------

def _ideal_of(spec: str, env: Mapping[str, int]) -> SimpleAlgebraId | None:
    series, rank = spec.split(":")
    r = evaluate(rank, env)
    if isinstance(r, Fraction):
        if r.denominator != 1:
            return None
        r = int(r)
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}[series]
    if r < minimum:
        return None
    try:
        return SimpleAlgebraId(series, r)
    except ValueError:
        return None


def _weight_of(token: str, alg: SimpleAlgebraId, env: Mapping[str, int]) -> HighestWeight:
    """Tokens: ``L1``, ``L(r-1)``, ``2L1``, with an optional trailing ``*`` for the dual."""
    t = token.strip()
    dual = t.endswith("*")
    if dual:
        t = t[:-1]
    coef, _, idx = t.partition("L")
    mult = int(coef) if coef else 1
    idx = idx.strip("()")
    i = evaluate(idx, dict(env, r=alg.rank))
    hw = HighestWeight.fundamental(alg.rank, int(i), mult)
    return dual_weight(alg, hw) if dual else hw


@dataclass(frozen=True)
class Instance:
    """A pattern instantiated at concrete parameters."""

    ideals: tuple[tuple[str, SimpleAlgebraId], ...]
    summands: tuple[tuple[tuple[str, HighestWeight], ...], ...]

    def module(self, charges: Sequence[Sequence] | None = None) -> ModuleExpr:
        """Module with one scalar per summand (or the given charge rows)."""
        names_ = [n for n, _ in self.ideals]
        alg = ReductiveAlgebra(tuple(a for _, a in self.ideals), len(self.summands))
        terms = []
        for j, s in enumerate(self.summands):
            d = dict(s)
            factors = tuple((d[n],) if n in d else () for n in names_)
            ch = charges[j] if charges is not None else tuple(int(i == j) for i in range(len(self.summands)))
            terms.append(Term(factors, tuple(ch)))
        if charges is not None:
            alg = ReductiveAlgebra(alg.ideals, len(charges[0]) if charges else 0)
        return ModuleExpr(alg, terms)


def instantiate(entry: MFEntry, binding: Mapping[str, int]) -> Instance | None:
    if not entry.admits(binding):
        return None
    for v in entry.variants:
        if not evaluate(v.when, binding):
            continue
        ideals = []
        for name, spec in v.ideals:
            a = _ideal_of(spec, binding)
            if a is None:
                break
            ideals.append((name, a))
        else:
            amap = dict(ideals)
            summands = tuple(tuple((n, _weight_of(tok, amap[n], binding)) for n, tok in s)
                             for s in v.summands)
            return Instance(tuple(ideals), summands)
    return None


# -- canonical forms ---------------------------------------------------------------

def canonical_ideal(alg: SimpleAlgebraId, hw: HighestWeight) -> tuple[SimpleAlgebraId, HighestWeight]:
    """Use A3 for D3 and C2 for B2 (exceptional isomorphisms)."""
    c = hw.coeffs
    if alg.series == "D" and alg.rank == 3:
        return SimpleAlgebraId("A", 3), HighestWeight((c[1], c[0], c[2]))
    if alg.series == "B" and alg.rank == 2:
        return SimpleAlgebraId("C", 2), HighestWeight((c[1], c[0]))
    return alg, hw


def _automorphisms(alg: SimpleAlgebraId) -> list[tuple[int, ...]]:
    """Diagram automorphisms as permutations of Dynkin labels."""
    r = alg.rank
    ident = tuple(range(r))
    if alg.series == "A" and r >= 2:
        return [ident, tuple(reversed(ident))]
    if alg.series == "D" and r == 4:
        outer = (0, 2, 3)
        out = []
        for p in itertools.permutations(outer):
            perm = [0, 1, 2, 3]
            for src, dst in zip(outer, p):
                perm[src] = dst
            out.append(tuple(perm))
        return out
    if alg.series == "D":
        return [ident, ident[:-2] + (r - 1, r - 2)]
    if alg.series == "E" and r == 6:
        return [ident, (5, 1, 4, 3, 2, 0)]
    return [ident]


def _apply(perm: tuple[int, ...], hw: HighestWeight) -> HighestWeight:
    c = [0] * len(perm)
    for i, x in enumerate(hw.coeffs):
        c[perm[i]] = x
    return HighestWeight(tuple(c))


# -- block decomposition ---------------------------------------------------------------

@dataclass(frozen=True)
class _Block:
    summands: tuple[int, ...]
    ideals: tuple[int, ...]


def _blocks(expr: ModuleExpr) -> list[_Block]:
    summ = expr.summands()
    parent = list(range(len(summ)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i
    owner: dict[int, int] = {}
    for j, t in enumerate(summ):
        for i, f in enumerate(t.factors):
            if f:
                if i in owner:
                    parent[find(j)] = find(owner[i])
                else:
                    owner[i] = j
    groups: dict[int, list[int]] = {}
    for j in range(len(summ)):
        groups.setdefault(find(j), []).append(j)
    out = []
    for g in groups.values():
        ids = sorted({i for j in g for i, f in enumerate(summ[j].factors) if f})
        out.append(_Block(tuple(g), tuple(ids)))
    return out


@dataclass
class BlockMatch:
    summands: tuple[int, ...]
    entry: MFEntry | None
    substitution: dict[str, int]
    order: tuple[int, ...]
    free: list[tuple[Fraction, ...]] = field(default_factory=list)
    reason: str = ""

    @property
    def matched(self) -> bool:
        return self.entry is not None


def _block_shape(expr: ModuleExpr, block: _Block):
    """Ideals and summands of a block, each summand as {ideal index: weight}."""
    summ = expr.summands()
    ideals = {}
    shapes = []
    for j in block.summands:
        d = {}
        for i in block.ideals:
            f = summ[j].factors[i]
            if len(f) > 1:
                return None, None
            if f:
                a, hw = canonical_ideal(expr.algebra.ideals[i], f[0])
                ideals[i] = a
                d[i] = hw
        shapes.append(d)
    return ideals, shapes


def _param_range(ideals: Mapping[int, SimpleAlgebraId]) -> range:
    top = max((a.rank for a in ideals.values()), default=1)
    return range(1, top + 3)


def _match_block(ideals: Mapping[int, SimpleAlgebraId], shapes: list[dict],
                 tables: Iterable[str]) -> tuple[MFEntry, dict, tuple[int, ...]] | None:
    n_s = len(shapes)
    sig = sorted((a.series, a.rank) for a in ideals.values())
    rows = [e for t in tables for e in table_rows() if e.table == t]
    for entry in rows:
        if (n_s == 1) != (entry.table in ("Ia", "Ib")):
            continue
        for binding in itertools.product(_param_range(ideals), repeat=len(entry.params)):
            env = dict(zip(entry.params, binding))
            inst = instantiate(entry, env)
            if inst is None:
                continue
            pat_ideals = dict(inst.ideals)
            pat_ideals = {k: canonical_ideal(a, HighestWeight.zero(a.rank))[0] for k, a in pat_ideals.items()}
            if sorted((a.series, a.rank) for a in pat_ideals.values()) != sig:
                continue
            order = _compare(ideals, shapes, inst)
            if order is not None:
                return entry, env, order
    return None


def _compare(ideals, shapes, inst: Instance) -> tuple[int, ...] | None:
    """Permutation of input summands matching the pattern summands, if any."""
    pnames = [n for n, _ in inst.ideals]
    pal = {n: canonical_ideal(a, HighestWeight.zero(a.rank))[0] for n, a in inst.ideals}
    psum = [{n: canonical_ideal(dict(inst.ideals)[n], hw)[1] for n, hw in s} for s in inst.summands]
    in_ids = list(ideals)
    for assign in itertools.permutations(in_ids, len(pnames)):
        if any((pal[n].series, pal[n].rank) != (ideals[i].series, ideals[i].rank)
               for n, i in zip(pnames, assign)):
            continue
        autos = [_automorphisms(ideals[i]) for i in assign]
        for choice in itertools.product(*autos):
            moved = []
            for s in shapes:
                m = {}
                for n, i, perm in zip(pnames, assign, choice):
                    if i in s:
                        m[n] = _apply(perm, s[i])
                moved.append(m)
            for order in itertools.permutations(range(len(shapes))):
                if all(moved[o] == psum[k] for k, o in enumerate(order)):
                    return order
    return None


def _trivial(shape: dict) -> bool:
    return not shape


def _free_directions(entry: MFEntry, env: Mapping[str, int], r: int) -> list[tuple[Fraction, ...]]:
    if entry.scalar_rule == "removable":
        return [tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r)]
    if entry.scalar_rule == "reducible":
        return [tuple(Fraction(evaluate(x, env)) for x in entry.bad_direction)]
    return []


@dataclass
class MatchResult:
    """Outcome of matching a module against the tables."""

    matched: bool
    entry: MFEntry | None
    substitution: dict[str, int]
    scalar_verdict: str
    blocks: list[BlockMatch] = field(default_factory=list)
    reason: str = ""

    def __post_init__(self):
        if self.matched and self.entry is not None and not self.entry.admits(self.substitution):
            raise ValueError("substitution violates the row constraints")

    @property
    def multiplicity_free(self) -> bool:
        return self.scalar_verdict == MF

    def describe(self) -> str:
        parts = []
        for b in self.blocks:
            if b.entry is None:
                parts.append(f"summands {list(b.summands)}: no table row ({b.reason})")
            else:
                sub = ", ".join(f"{k}={v}" for k, v in b.substitution.items())
                parts.append(f"summands {list(b.summands)}: {b.entry.source} {b.entry.display}"
                             + (f" [{sub}]" if sub else ""))
        return f"{self.scalar_verdict}; " + "; ".join(parts)


def _with_scalars(expr: ModuleExpr, scalars: Sequence[Sequence] | None) -> ModuleExpr:
    if not scalars:
        return expr
    summ = expr.summands()
    for s in scalars:
        if len(s) != len(summ):
            raise ValueError("each scalar charge vector needs one entry per summand")
    alg = ReductiveAlgebra(expr.algebra.ideals, expr.algebra.abelian_rank + len(scalars))
    terms = [Term(t.factors, tuple(t.charges) + tuple(Fraction(s[j]) for s in scalars))
             for j, t in enumerate(summ)]
    return ModuleExpr(alg, terms)


def match_mf(expr: ModuleExpr, scalars: Sequence[Sequence] | None = None) -> MatchResult:
    """Decide multiplicity freeness of ``expr`` (plus optional extra scalar lines,
    each a vector with one charge per summand in ``expr.summands()`` order)."""
    expr = _with_scalars(expr, scalars)
    summ = expr.summands()
    blocks = _blocks(expr)
    results: list[BlockMatch] = []
    free: list[list[Fraction]] = []
    all_matched = True
    r_total = len(summ)
    for b in blocks:
        ideals, shapes = _block_shape(expr, b)
        if shapes is None:
            results.append(BlockMatch(b.summands, None, {}, (), reason="formal tensor product"))
            all_matched = False
            continue
        if len(shapes) > 2:
            results.append(BlockMatch(b.summands, None, {}, (),
                                      reason=f"{len(shapes)} summands share simple ideals"))
            all_matched = False
            continue
        if len(shapes) == 1 and _trivial(shapes[0]):
            entry = next(e for e in table_rows() if e.id == "Ia-1")
            results.append(BlockMatch(b.summands, entry, {"n": 1}, (0,)))
            continue
        tables = ("Ib", "Ia") if len(shapes) == 1 else ("IIa", "IIb")
        found = _match_block(ideals, shapes, tables)
        if found is None:
            results.append(BlockMatch(b.summands, None, {}, (), reason="not in the tables"))
            all_matched = False
            continue
        entry, env, order = found
        local = _free_directions(entry, env, len(shapes))
        bm = BlockMatch(b.summands, entry, env, order)
        for d in local:
            vec = [Fraction(0)] * r_total
            for k, o in enumerate(order):
                vec[b.summands[o]] = d[k]
            bm.free.append(tuple(vec))
            free.append(vec)
        results.append(bm)
    if not all_matched:
        verdict = NOT_MF
    else:
        cols = [[Fraction(summ[j].charges[c]) for j in range(r_total)]
                for c in range(expr.algebra.abelian_rank)]
        verdict = MF if exact_rank(cols + free) == r_total else MF_MORE_SCALARS
    single = results[0] if len(results) == 1 else None
    entry = single.entry if single else None
    return MatchResult(all_matched, entry, dict(single.substitution) if single and entry else {},
                       verdict, results,
                       "" if all_matched else "; ".join(b.reason for b in results if b.reason))


# -- numeric oracle ------------------------------------------------------------------

MAX_DIM = 64


def _as_generators(rep, include_scalars) -> tuple[list[np.ndarray], int]:
    if isinstance(rep, ModuleExpr):
        from .reps import module_generators
        gens = module_generators(rep)
        n = rep.dim
    else:
        gens = [np.asarray(g, dtype=complex) for g in rep]
        if not gens:
            raise ValueError("a matrix realization needs at least one generator")
        n = gens[0].shape[0]
    for ch in include_scalars or ():
        ch = np.asarray(ch)
        if ch.ndim == 1:
            if len(ch) != n:
                raise ValueError("scalar charge vector has the wrong length")
            gens.append(1j * np.diag(ch.astype(float)))
        else:
            gens.append(np.asarray(ch, dtype=complex))
    return gens, n


def numeric_mf_result(rep, include_scalars=None, trials: int = 8, seed: int = 0,
                      tol: float = DEFAULT_TOL):
    """Rank-condition data for the action on the projective completion P(V + C)."""
    from .oracle import cohomogeneity_of_generators
    gens, n = _as_generators(rep, include_scalars)
    if n > MAX_DIM:
        raise ValueError(f"dim V = {n} exceeds the desk-scale bound {MAX_DIM}")
    padded = []
    for g in gens:
        m = np.zeros((n + 1, n + 1), complex)
        m[:n, :n] = g
        padded.append(m)
    return cohomogeneity_of_generators(padded, 1, n + 1, trials=trials, seed=seed, tol=tol)


def numeric_mf_check(rep, include_scalars=None, trials: int = 8, seed: int = 0,
                     tol: float = DEFAULT_TOL) -> bool:
    """Independent multiplicity-freeness test.

    ``rep`` is a ModuleExpr or a list of anti-Hermitian matrices on V;
    ``include_scalars`` adds charge vectors (diagonal scalar generators).  V is
    multiplicity free exactly when K acts coisotropically on P(V + C), where K
    fixes the extra line; the affine chart V is then a dense orbit-stable
    subset, so the rank condition there is the Borel open-orbit condition on V.
    """
    return numeric_mf_result(rep, include_scalars, trials, seed, tol).coisotropic


# -- textual modules ------------------------------------------------------------------

def _ideal_from_name(name: str) -> SimpleAlgebraId:
    import re
    base = name.split("#")[0].lower()
    m = re.fullmatch(r"(su|sp|so|spin)\(?(\d+)\)?|(g2|f4|e6|e7|e8)", base)
    if not m:
        raise ValueError(f"unknown simple ideal {name!r}")
    if m.group(3):
        return SimpleAlgebraId(m.group(3)[0].upper(), int(m.group(3)[1]))
    kind, n = m.group(1), int(m.group(2))
    if kind == "su":
        if n < 2:
            raise ValueError("su(n) needs n >= 2")
        return SimpleAlgebraId("A", n - 1)
    if kind == "sp":
        return SimpleAlgebraId("A", 1) if n == 1 else SimpleAlgebraId("C", n)
    if n < 5:
        raise ValueError(f"{name}: use su(2) or su(2) x su(2) for so(3) and so(4)")
    return SimpleAlgebraId("B", (n - 1) // 2) if n % 2 else SimpleAlgebraId("D", n // 2)


def _weight_token(token: str, alg: SimpleAlgebraId) -> HighestWeight:
    t = token.strip()
    if t.startswith("["):
        return HighestWeight(tuple(int(x) for x in t.strip("[]").split(",")))
    return _weight_of(t, alg, {})


def parse_module(text: str, scalars: str = "full") -> ModuleExpr:
    """Parse ``"su3:2L1 + su3:L1 * su2:L1"``.

    Summands are separated by ``+`` and factors by ``*``.  Repeated ideal
    names denote the same ideal (use ``su2#1``, ``su2#2`` for distinct
    copies).  Weights are ``L1``, ``2L1``, ``L2*`` or Dynkin labels ``[1,0,1]``; a
    trailing ``*`` marks the dual, so ``su3:L1* * su2:L1`` has two factors.
    A summand may end with a charge tuple such as ``(1,0)``; if no summand
    carries charges, ``scalars`` is ``"full"`` (one scalar per summand) or
    ``"none"``.  A summand ``1`` is the trivial one-dimensional module.
    """
    import re
    order: list[str] = []
    algs: dict[str, SimpleAlgebraId] = {}
    parsed = []
    for part in [p.strip() for p in re.split(r"\+(?![^(]*\))", text) if p.strip()]:
        m = re.fullmatch(r"(.*?)\s*(\(([-\d/,\s]*)\))?", part)
        body, charges = m.group(1).strip(), m.group(3)
        facs = {}
        if body != "1":
            for f in re.split(r"\*(?=\s*[A-Za-z][\w#]*\s*(?::|$))", body):
                name, _, w = f.strip().partition(":")
                name = name.strip()
                if name not in algs:
                    algs[name] = _ideal_from_name(name)
                    order.append(name)
                if name in facs:
                    raise ValueError(f"ideal {name} appears twice in one summand")
                facs[name] = _weight_token(w or "L1", algs[name])
        ch = tuple(Fraction(x) for x in charges.split(",") if x.strip()) if charges is not None else None
        parsed.append((facs, ch))
    given = [c for _, c in parsed if c is not None]
    if given and len(given) != len(parsed):
        raise ValueError("either every summand carries charges or none does")
    if given:
        width = {len(c) for c in given}
        if len(width) != 1:
            raise ValueError("charge tuples differ in length")
        rows = [c for _, c in parsed]
    elif scalars == "full":
        rows = [tuple(Fraction(int(i == j)) for i in range(len(parsed))) for j in range(len(parsed))]
    elif scalars == "none":
        rows = [() for _ in parsed]
    else:
        raise ValueError("scalars must be 'full' or 'none'")
    alg = ReductiveAlgebra(tuple(algs[n] for n in order), len(rows[0]) if rows else 0)
    terms = [Term(tuple((f[n],) if n in f else () for n in order), c) for (f, _), c in zip(parsed, rows)]
    return ModuleExpr(alg, terms)


CATALOGUED_NEGATIVES: tuple[str, ...] = (
    "su3:2L1 + su3:L1 * su2:L1",
    "su3:L1 + su3:L1 + su3:L1",
    "su2:L1 + su2:L1 + su2:L1",
    "su3:[1,1]",
    "su2:3L1",
    "su3:3L1",
    "su2#1:L1 * su2#2:L1 * su2#3:L1",
    "su3#1:L1 * su3#2:L1 * su2:L1",
    "su2#1:L1 * su2#2:L1 * su3:L1",
    "sp2#1:L1 * sp2#2:L1",
    "su4:L1 * sp3:L1",
    "su2#1:2L1 * su2#2:L1",
    "su6:L3",
    "su7:L3",
    "sp3:L2",
    "g2:L2",
    "spin11:L5",
    "spin7:L3 + spin7:L1",
    "g2:L1 + g2:L1",
    "e7:L7",
)
