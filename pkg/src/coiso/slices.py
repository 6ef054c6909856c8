"""Slice representations at distinguished orbits, with a character cross-check.

For a block embedding K of su(n) a k-plane is split as pi = (+) pi_b with pi_b
inside block b (isotropic for sp and so blocks).  Its orbit is complex and
the slice is

    (+)_{b != c} pi_b^* (x) pi_c^perp  (+)  (+)_{sp blocks} L2(pi_b^*)
                                         (+)  (+)_{so blocks} S2(pi_b^*)

as a module of the stabilizer (a product of u(k_b) factors with su, sp or so
complements, together with the abelian part of K).  For su(p) (x) su(q) the
plane W (x) v has slice sl(W) (x) v^* (x) v^perp (+) W^* (x) W^perp (x) v^* (x) v^perp.
For spin(7) on Gr(2,8) the orbit through span{|0>, |123>} is totally real with
isotropy u(3) and slice C^3 (+) L2(C^3) (charges 1 and 2).

Every result carries the torus weights of the ambient basis so that the
slice can be recomputed from the actual tangent space (``slice_character``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

import numpy as np

from .embeddings import (
    BlockSpec,
    MatrixEmbedding,
    from_epsilon,
    ortho_structure,
    so_eps,
    sp_eps,
    su_eps,
    symp_structure,
    unitary_structure,
)
from .lie import HighestWeight, ReductiveAlgebra, SimpleAlgebraId, dual_weight
from .modules import CharPoly, ModuleExpr, Term, char_decompose
from .numerics import complex_rank, numeric_rank, realify

__all__ = [
    "SliceError",
    "SliceResult",
    "slice_at_complex_orbit",
    "slice_character",
    "cross_check_slice",
    "default_split",
]


class SliceError(ValueError):
    """The family or parameters do not admit a catalogued slice computation."""


@dataclass
class SliceResult:
    family: str
    stabilizer: ReductiveAlgebra
    slice: ModuleExpr
    plane: tuple[int, ...]
    weights: tuple
    orbit: str
    split: tuple[int, ...] = ()
    totally_real: bool = False
    ideal_names: tuple[str, ...] = field(default_factory=tuple)

    def describe(self) -> dict:
        return {"family": self.family, "orbit": self.orbit, "split": list(self.split),
                "stabilizer": str(self.stabilizer), "slice": self.slice.pretty(),
                "totally_real": self.totally_real}


# -- helpers ------------------------------------------------------------------------

@dataclass
class _Piece:
    """An irreducible piece of the ambient space under the stabilizer."""

    indices: list[int]
    factors: dict[int, HighestWeight]      # ideal slot -> highest weight
    charges: tuple[Fraction, ...]

    def dual(self, ideals) -> "_Piece":
        return _Piece(self.indices, {s: dual_weight(ideals[s], w) for s, w in self.factors.items()},
                      tuple(-c for c in self.charges))


def _primitive(v: Sequence[Fraction]) -> list[Fraction]:
    den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(x).denominator for x in v), 1)
    ints = [int(Fraction(x) * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints), 0) or 1
    return [Fraction(x, g) for x in ints]


def _tensor_term(ideals, pieces: Sequence[_Piece], n_ab: int, extra: dict | None = None,
                 charge_scale: Sequence[int] | None = None) -> Term:
    """Outer tensor product of pieces living on distinct ideals."""
    fac: dict[int, HighestWeight] = {}
    ch = [Fraction(0)] * n_ab
    for p in pieces:
        for s, w in p.factors.items():
            if s in fac:
                raise SliceError("pieces share an ideal; not an outer tensor product")
            fac[s] = w
        ch = [a + b for a, b in zip(ch, p.charges)]
    if extra:
        fac.update(extra)
    return Term(tuple(fac.get(s, HighestWeight.zero(a.rank)) for s, a in enumerate(ideals)), tuple(ch))


def default_split(blocks: Sequence[BlockSpec], k: int) -> tuple[int, ...]:
    """Greedy distribution of k over blocks (in order), respecting capacities."""
    caps = []
    for b in blocks:
        if b.kind == "su":
            caps.append(b.param)
        elif b.kind == "triv":
            caps.append(1)
        elif b.kind == "sp":
            caps.append(b.param)
        elif b.kind == "so":
            caps.append(b.param // 2)
        else:
            raise SliceError(f"no complex-orbit slice for block kind {b.kind}")
    out, left = [], k
    for c in caps:
        t = min(c, left)
        out.append(t)
        left -= t
    if left:
        raise SliceError("plane does not fit into isotropic block subspaces")
    return tuple(out)


# -- block family -------------------------------------------------------------------

def _block_slice(e: MatrixEmbedding, k: int, split: Sequence[int] | None) -> SliceResult:
    blocks = e.blocks
    split = tuple(split) if split is not None else default_split(blocks, k)
    if len(split) != len(blocks) or sum(split) != k:
        raise SliceError(f"split {split} does not distribute k={k} over {len(blocks)} blocks")
    n = e.n
    ideals: list[SimpleAlgebraId] = []
    names: list[str] = []
    # per ambient index: list of (slot, eps-map, local eps) to fill Dynkin labels
    dyn_fill: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(n)]
    abel_vecs: list[list[Fraction]] = [[Fraction(x) for x in v] for v in e.abelian]
    plane: list[int] = []
    piece_specs = []   # (block index, role, indices, {slot: hw})

    def add_ideals(ids, name):
        s = len(ideals)
        ideals.extend(ids)
        names.extend([name] * len(ids))
        return s

    for bi, (b, kb) in enumerate(zip(blocks, split)):
        o = b.offset
        if b.kind == "triv":
            if kb not in (0, 1):
                raise SliceError("a trivial block holds at most a line")
            (plane if kb else []).append(o)
            piece_specs.append((bi, "P" if kb else "C", [o], {}))
            continue
        if b.kind == "su":
            d = b.param
            if not 0 <= kb <= d:
                raise SliceError("block too small for its share of the plane")
            ids_p, fp = unitary_structure(kb)
            sp_ = add_ideals(ids_p, f"pi{bi}")
            ids_c, fc = unitary_structure(d - kb)
            sc = add_ideals(ids_c, f"C{bi}")
            P = list(range(o, o + kb))
            C = list(range(o + kb, o + d))
            for i, j in enumerate(P):
                dyn_fill[j] += [(sp_ + t, x) for t, x in enumerate(fp(su_eps(kb, i))[0])]
            for i, j in enumerate(C):
                dyn_fill[j] += [(sc + t, x) for t, x in enumerate(fc(su_eps(d - kb, i))[0])]
            if 0 < kb < d:
                v = [Fraction(0)] * n
                for j in P:
                    v[j] = Fraction(d - kb)
                for j in C:
                    v[j] = Fraction(-kb)
                abel_vecs.append(_primitive(v))
            plane += P
            hw_p = {sp_: HighestWeight.fundamental(kb - 1, 1)} if ids_p else {}
            hw_c = {sc: HighestWeight.fundamental(d - kb - 1, 1)} if ids_c else {}
            if P:
                piece_specs.append((bi, "P", P, hw_p))
            if C:
                piece_specs.append((bi, "C", C, hw_c))
            continue
        if b.kind in ("sp", "so"):
            m = b.param
            if b.kind == "sp":
                if not 0 <= kb <= m:
                    raise SliceError("isotropic plane too large for sp block")
                P = list(range(o, o + kb))
                JP = list(range(o + m, o + m + kb))
                W = list(range(o + kb, o + m)) + list(range(o + m + kb, o + 2 * m))
                wdim = 2 * (m - kb)
                ids_w, fw = symp_structure(m - kb)
                ab_w = 0

                def w_eps(i, mm=m - kb):
                    return sp_eps(mm, i)
            else:
                if not 0 <= 2 * kb <= m:
                    raise SliceError("isotropic plane too large for so block")
                P = list(range(o, o + kb))
                JP = [o + m - 1 - i for i in range(kb)]
                W = list(range(o + kb, o + m - kb))
                wdim = m - 2 * kb
                ids_w, ab_w, fw = ortho_structure(wdim)

                def w_eps(i, mm=wdim):
                    return so_eps(mm, i)
            ids_p, fp = unitary_structure(kb)
            sp_ = add_ideals(ids_p, f"pi{bi}")
            sw = add_ideals(ids_w, f"W{bi}")
            for i, j in enumerate(P):
                dyn_fill[j] += [(sp_ + t, x) for t, x in enumerate(fp(su_eps(kb, i))[0])]
            for i, j in enumerate(JP):
                neg = [-x for x in su_eps(kb, i)]
                dyn_fill[j] += [(sp_ + t, x) for t, x in enumerate(fp(neg)[0])]
            w_charges = []
            for i, j in enumerate(W):
                dy, chg = fw(w_eps(i))
                dyn_fill[j] += [(sw + t, x) for t, x in enumerate(dy)]
                w_charges.append(chg)
            if kb:
                v = [Fraction(0)] * n
                for j in P:
                    v[j] = Fraction(1)
                for j in JP:
                    v[j] = Fraction(-1)
                abel_vecs.append(v)
            if ab_w:
                v = [Fraction(0)] * n
                for i, j in enumerate(W):
                    v[j] = Fraction(w_charges[i][0])
                abel_vecs.append(v)
            plane += P
            hw_p = {sp_: HighestWeight.fundamental(kb - 1, 1)} if ids_p else {}
            if P:
                piece_specs.append((bi, "P", P, hw_p))
                piece_specs.append((bi, "J", JP, {sp_: dual_weight(ideals[sp_], hw_p[sp_])} if ids_p else {}))
            if W:
                if ab_w:
                    # so(2): two lines with opposite charges
                    for j in W:
                        piece_specs.append((bi, "W", [j], {}))
                else:
                    vec = fw(w_eps(0))[0] if b.kind == "so" else None
                    if b.kind == "sp":
                        hw_w = {sw: HighestWeight.fundamental(m - kb, 1) if m - kb > 1 else HighestWeight((1,))}
                    else:
                        hw_w = {sw + t: HighestWeight(tuple(x)) for t, x in enumerate(vec)}
                    piece_specs.append((bi, "W", W, hw_w))
            continue
        raise SliceError(f"no complex-orbit slice for block kind {b.kind}")

    n_ab = len(abel_vecs)
    stab = ReductiveAlgebra(tuple(ideals), n_ab)
    weights = []
    for j in range(n):
        dyn = [(0,) * a.rank for a in ideals]
        for s, x in dyn_fill[j]:
            dyn[s] = tuple(x)
        weights.append((tuple(dyn), tuple(v[j] for v in abel_vecs)))

    def charges_of(idx):
        return tuple(v[idx[0]] for v in abel_vecs)

    pieces = []
    for bi, role, idx, hw in piece_specs:
        pieces.append((bi, role, _Piece(idx, hw, charges_of(idx))))

    terms: list[Term] = []
    P_pieces = [(bi, p) for bi, role, p in pieces if role == "P"]
    for bi, p in P_pieces:
        pd = p.dual(ideals)
        for cj, role, q in pieces:
            if role == "P" or cj == bi:
                continue
            terms.append(_tensor_term(ideals, [pd, q], n_ab))
        b = blocks[bi]
        kb = split[bi]
        if b.kind in ("sp", "so") and kb >= 1:
            jp = next(q for cj, role, q in pieces if cj == bi and role == "J")
            ch = tuple(a + c for a, c in zip(jp.charges, pd.charges))
            if kb == 1:
                if b.kind == "so":
                    terms.append(Term(tuple(HighestWeight.zero(a.rank) for a in ideals), ch))
                continue
            slot = next(iter(p.factors))
            r = kb - 1
            if b.kind == "sp":
                w = HighestWeight.fundamental(r, r - 1) if r >= 2 else HighestWeight.zero(r)
            else:
                w = HighestWeight.fundamental(r, r, 2)
            fac = [HighestWeight.zero(a.rank) for a in ideals]
            fac[slot] = w
            terms.append(Term(tuple(fac), ch))
    expr = ModuleExpr(stab, terms)
    orbit = " x ".join(
        f"{'Gr' if b.kind == 'su' else ('IGr_sp' if b.kind == 'sp' else ('OGr' if b.kind == 'so' else 'pt'))}"
        f"({kb},{b.size})" for b, kb in zip(blocks, split))
    return SliceResult("block", stab, expr, tuple(sorted(plane)), tuple(weights), orbit, split,
                       False, tuple(names))


# -- tensor family ------------------------------------------------------------------

def _tensor_slice(e: MatrixEmbedding, k: int) -> SliceResult:
    p, q = e.params["p"], e.params["q"]
    if k > p:
        raise SliceError("plane W (x) v needs k <= p; use tensor(q,p) for the other factor")
    ideals, names = [], []
    ids_w, fw = unitary_structure(k)
    ids_c, fc = unitary_structure(p - k)
    ids_v, fv = unitary_structure(q - 1)
    sw = len(ideals); ideals += ids_w; names += ["W"] * len(ids_w)
    sc = len(ideals); ideals += ids_c; names += ["Wperp"] * len(ids_c)
    sv = len(ideals); ideals += ids_v; names += ["vperp"] * len(ids_v)
    r1 = _primitive([Fraction(p - k)] * k + [Fraction(-k)] * (p - k)) if 0 < k < p else None
    r2 = _primitive([Fraction(q - 1)] + [Fraction(-1)] * (q - 1))
    abel = [r for r in (r1, r2) if r is not None]
    weights, plane = [], []
    for i in range(p):
        for j in range(q):
            dyn = [(0,) * a.rank for a in ideals]
            if i < k and ids_w:
                dyn[sw] = tuple(fw(su_eps(k, i))[0][0])
            if i >= k and ids_c:
                dyn[sc] = tuple(fc(su_eps(p - k, i - k))[0][0])
            if j >= 1 and ids_v:
                dyn[sv] = tuple(fv(su_eps(q - 1, j - 1))[0][0])
            ch = []
            if r1 is not None:
                ch.append(r1[i])
            ch.append(r2[j])
            weights.append((tuple(dyn), tuple(ch)))
            if i < k and j == 0:
                plane.append(i * q + j)
    stab = ReductiveAlgebra(tuple(ideals), len(abel))

    def hw(slot, ids, which):
        if not ids:
            return {}
        r = ideals[slot].rank
        if which == "def":
            return {slot: HighestWeight.fundamental(r, 1)}
        if which == "dual":
            return {slot: HighestWeight.fundamental(r, r)}
        return {slot: HighestWeight(tuple([1] + [0] * (r - 2) + [1]) if r > 1 else (2,))}

    def term(fac: dict, ch):
        return Term(tuple(fac.get(s, HighestWeight.zero(a.rank)) for s, a in enumerate(ideals)), tuple(ch))

    # charges: pi = W (x) v; v^* (x) v^perp contributes r2(vperp) - r2(v)
    dv = r2[1] - r2[0]
    terms = []
    if k >= 2:
        f = {}
        f.update(hw(sw, ids_w, "adj"))
        f.update(hw(sv, ids_v, "def"))
        terms.append(term(f, ([Fraction(0)] if r1 else []) + [dv]))
    if p > k:
        f = {}
        f.update(hw(sw, ids_w, "dual"))
        f.update(hw(sc, ids_c, "def"))
        f.update(hw(sv, ids_v, "def"))
        terms.append(term(f, [r1[k] - r1[0], dv]))
    expr = ModuleExpr(stab, terms)
    return SliceResult("tensor", stab, expr, tuple(plane), tuple(weights), f"Gr({k},{p}) x P^{q - 1}",
                       (k,), False, tuple(names))


# -- spin(7) ------------------------------------------------------------------------

def _spin7_slice(e: MatrixEmbedding, k: int) -> SliceResult:
    if k != 2:
        raise SliceError("the totally real spin(7) orbit is catalogued only for Gr(2,8)")
    a2 = SimpleAlgebraId("A", 2)
    weights = []
    for s in range(8):
        chi = [Fraction(s >> j & 1) for j in range(3)]
        weights.append(((from_epsilon(a2, chi),), (Fraction(sum(chi)) - Fraction(3, 2),)))
    stab = ReductiveAlgebra((a2,), 1)
    expr = ModuleExpr(stab, [Term((HighestWeight((1, 0)),), (1,)), Term((HighestWeight((0, 1)),), (2,))])
    return SliceResult("totally-real", stab, expr, (0, 7), tuple(weights),
                       "real Grassmannian Gr_R(2,8)", (), True, ("C3",))


def slice_at_complex_orbit(e: MatrixEmbedding, k: int, family: str | None = None,
                           split: Sequence[int] | None = None) -> SliceResult:
    """Stabilizer and slice module at the catalogued distinguished orbit."""
    fam = family or e.kind
    if fam != e.kind and not (fam == "totally-real" and e.kind == "spin7"):
        raise SliceError(f"family {fam!r} does not match embedding kind {e.kind!r}")
    if e.kind == "block":
        return _block_slice(e, k, split)
    if e.kind == "tensor":
        return _tensor_slice(e, k)
    if e.kind == "spin7":
        return _spin7_slice(e, k)
    raise SliceError(f"no catalogued slice for {e.label}")


# -- numeric recomputation ----------------------------------------------------------------

def _key_sub(a, b):
    return (tuple(tuple(x - y for x, y in zip(u, v)) for u, v in zip(a[0], b[0])),
            tuple(x - y for x, y in zip(a[1], b[1])))


def slice_character(e: MatrixEmbedding, res: SliceResult, tol: float = 1e-8) -> tuple[CharPoly, dict]:
    """Character of the normal space computed from the actual tangent map.

    For complex orbits this is the slice itself.  For a totally real orbit it
    is the complexification of the normal space, which equals the whole
    tangent space as a module of the isotropy torus.
    """
    n = e.n
    plane = list(res.plane)
    comp = [j for j in range(n) if j not in plane]
    cols = [(i, j) for i in plane for j in comp]
    wts = [_key_sub(res.weights[j], res.weights[i]) for i, j in cols]
    images = [np.array([x[j, i] for i, j in cols]) for x in e.generators]
    real_dim = numeric_rank(np.array([realify(v) for v in images]), tol) if images else 0
    cplx_dim = complex_rank(images, tol)
    info = {"orbit_real_dim": real_dim, "orbit_complex_span": cplx_dim,
            "complex_orbit": real_dim == 2 * cplx_dim,
            "totally_real": real_dim == cplx_dim == len(cols) and real_dim > 0 or
                            (cplx_dim == real_dim and real_dim > 0)}
    out: dict = {}
    if res.totally_real:
        for w in wts:
            out[w] = out.get(w, 0) + 1
        return CharPoly(out), info
    groups: dict = {}
    for c, w in enumerate(wts):
        groups.setdefault(w, []).append(c)
    mat = np.array(images) if images else np.zeros((0, len(cols)))
    for w, idx in groups.items():
        r = numeric_rank(mat[:, idx], tol) if len(mat) else 0
        if len(idx) - r:
            out[w] = len(idx) - r
    return CharPoly(out), info


def _torus_in_algebra(e: MatrixEmbedding, res: SliceResult, tol: float = 1e-8) -> bool:
    """The recorded stabilizer torus lies in K (coroots and abelian generators)."""
    from .numerics import in_span_residual
    for s, a in enumerate(res.stabilizer.ideals):
        for i in range(a.rank):
            d = 1j * np.diag([float(w[0][s][i]) for w in res.weights])
            if in_span_residual(d, e.generators) > tol * max(1.0, np.linalg.norm(d)):
                return False
    for t in range(res.stabilizer.abelian_rank):
        d = 1j * np.diag([float(w[1][t]) for w in res.weights])
        if in_span_residual(d, e.generators) > tol * max(1.0, np.linalg.norm(d)):
            return False
    return True


def cross_check_slice(e: MatrixEmbedding, res: SliceResult, tol: float = 1e-8) -> dict:
    """Compare the symbolic slice with the decomposition of the honest normal space."""
    ch, info = slice_character(e, res, tol)
    numeric = char_decompose(ch, res.stabilizer)
    expected = res.slice.direct_sum(res.slice.dual()) if res.totally_real else res.slice
    ok = numeric == expected and _torus_in_algebra(e, res, tol)
    if res.totally_real:
        ok = ok and info["orbit_real_dim"] == info["orbit_complex_span"]
    else:
        ok = ok and info["complex_orbit"]
    return {"agree": ok, "numeric": numeric.pretty(), "symbolic": expected.pretty(), **info}
