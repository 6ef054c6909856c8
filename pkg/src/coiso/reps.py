"""Matrix realizations of irreducible modules from Chevalley generators.

Each realization provides real matrices E_i, F_i = E_i^T, H_i (simple
Chevalley generators) in an orthonormal basis of weight vectors.  Compact
generators are then produced from a fixed list of nested brackets, so two
realizations of the same simple algebra are images of the *same* abstract
basis.  This is what makes direct sums with a shared ideal (for example
su(n) acting diagonally on C^n (+) C^n) come out right.

Construction routes:
  * minuscule modules of simply-laced algebras: weight strings with unit
    coefficients;
  * vector modules of B, C, D: explicit matrices;
  * spin module of B_r: folding of a half-spin module of D_{r+1};
  * 7-dimensional module of G2: folding of the vector module of D4;
  * everything else: highest weight vectors inside tensor products.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .lie import HighestWeight, SimpleAlgebraId
from .modules import ModuleExpr, _root_dynkin, weight_multiplicities

__all__ = ["ChevalleyRep", "irrep", "compact_generators", "module_generators"]


@dataclass(frozen=True)
class ChevalleyRep:
    algebra: SimpleAlgebraId
    hw: HighestWeight
    E: tuple[np.ndarray, ...]
    H: tuple[np.ndarray, ...]
    weights: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def F(self) -> tuple[np.ndarray, ...]:
        return tuple(e.T for e in self.E)


def _simple_dynkin(alg: SimpleAlgebraId) -> list[tuple[int, ...]]:
    return [_root_dynkin(alg, tuple(int(i == j) for j in range(alg.rank))) for i in range(alg.rank)]


def _from_weights(alg, hw, weights, coeff) -> ChevalleyRep:
    idx = {w: i for i, w in enumerate(weights)}
    d = len(weights)
    E, H = [], []
    for i, a in enumerate(_simple_dynkin(alg)):
        e = np.zeros((d, d))
        for mu in weights:
            nu = tuple(x + y for x, y in zip(mu, a))
            if nu in idx:
                e[idx[nu], idx[mu]] = coeff(i, mu, nu)
        E.append(e)
        H.append(np.diag([float(mu[i]) for mu in weights]))
    return ChevalleyRep(alg, hw, tuple(E), tuple(H), tuple(weights))


def _minuscule(alg: SimpleAlgebraId, hw: HighestWeight) -> ChevalleyRep:
    wm = weight_multiplicities(alg, hw)
    weights = sorted(wm, key=lambda w: tuple(-x for x in w))
    return _from_weights(alg, hw, weights, lambda i, mu, nu: 1.0)


def _vector_classical(alg: SimpleAlgebraId) -> ChevalleyRep:
    """Vector module of B_r, C_r or D_r in the basis e_1..e_r, (e_0), -e_r..-e_1."""
    s, r = alg.series, alg.rank
    pos = list(range(r))
    basis = [("+", i) for i in pos] + ([("0", 0)] if s == "B" else []) + [("-", i) for i in reversed(pos)]
    ix = {b: t for t, b in enumerate(basis)}
    d = len(basis)

    def unit(a, b):
        m = np.zeros((d, d))
        m[ix[a], ix[b]] = 1
        return m
    E = []
    for i in range(r - 1):
        E.append(unit(("+", i), ("+", i + 1)) - unit(("-", i + 1), ("-", i)))
    if s == "B":
        E.append(np.sqrt(2) * (unit(("+", r - 1), ("0", 0)) - unit(("0", 0), ("-", r - 1))))
    elif s == "C":
        E.append(unit(("+", r - 1), ("-", r - 1)))
    else:
        E.append(unit(("+", r - 2), ("-", r - 1)) - unit(("+", r - 1), ("-", r - 2)))
    H = [e @ e.T - e.T @ e for e in E]
    weights = [tuple(int(round(h[t, t])) for h in H) for t in range(d)]
    return ChevalleyRep(alg, HighestWeight.fundamental(r, 1), tuple(E), tuple(H), tuple(weights))


def _fold(target: SimpleAlgebraId, big: ChevalleyRep, groups: Sequence[Sequence[int]]) -> ChevalleyRep:
    E = tuple(sum(big.E[j] for j in g) for g in groups)
    H = tuple(sum(big.H[j] for j in g) for g in groups)
    weights = tuple(tuple(int(round(h[t, t])) for h in H) for t in range(big.dim))
    top = big.weights.index(big.hw.coeffs)
    return _generate(target, E, H, weights, [top])


def _generate(alg, E, H, weights, start_vectors, start_coeffs=None) -> ChevalleyRep:
    """Submodule generated from a highest weight vector by lowering operators."""
    d = len(weights)
    if start_coeffs is None:
        v0 = np.zeros(d)
        v0[start_vectors[0]] = 1
    else:
        v0 = start_coeffs
    hw = tuple(int(round(v0 @ h @ v0 / (v0 @ v0))) for h in H)
    F = [e.T for e in E]
    by_weight: dict[tuple, list[np.ndarray]] = {hw: [v0 / np.linalg.norm(v0)]}
    layer = [(hw, by_weight[hw][0])]
    simple = _simple_dynkin(alg)
    while layer:
        new: dict[tuple, list[np.ndarray]] = {}
        for mu, v in layer:
            for i, f in enumerate(F):
                w = f @ v
                if np.linalg.norm(w) < 1e-12:
                    continue
                nu = tuple(x - y for x, y in zip(mu, simple[i]))
                new.setdefault(nu, []).append(w)
        layer = []
        for nu, vecs in new.items():
            cur = by_weight.get(nu, [])
            basis = list(cur)
            for w in vecs:
                for b in basis:
                    w = w - (b @ w) * b
                nrm = np.linalg.norm(w)
                if nrm > 1e-9:
                    basis.append(w / nrm)
                    layer.append((nu, basis[-1]))
            by_weight[nu] = basis
    order = sorted(by_weight, key=lambda w: tuple(-x for x in w))
    cols, wts = [], []
    for w in order:
        for v in by_weight[w]:
            cols.append(v)
            wts.append(w)
    B = np.array(cols).T
    E2 = tuple(B.T @ e @ B for e in E)
    H2 = tuple(B.T @ h @ B for h in H)
    return ChevalleyRep(alg, HighestWeight(hw), E2, H2, tuple(wts))


def _tensor(a: ChevalleyRep, b: ChevalleyRep, hw: HighestWeight) -> ChevalleyRep:
    ia, ib = np.eye(a.dim), np.eye(b.dim)
    E = [np.kron(x, ib) + np.kron(ia, y) for x, y in zip(a.E, b.E)]
    H = [np.kron(x, ib) + np.kron(ia, y) for x, y in zip(a.H, b.H)]
    weights = [tuple(x + y for x, y in zip(u, v)) for u in a.weights for v in b.weights]
    target = hw.coeffs
    idx = [t for t, w in enumerate(weights) if w == target]
    if not idx:
        raise ValueError(f"weight {target} does not occur in the tensor product")
    sub = np.zeros((len(weights), len(idx)))
    for c, t in enumerate(idx):
        sub[t, c] = 1
    m = np.vstack([e @ sub for e in E])
    _, s, vt = np.linalg.svd(m)
    rank = int((s > 1e-9 * max(1.0, s[0] if s.size else 1.0)).sum())
    if rank >= len(idx):
        raise ValueError(f"no highest weight vector of weight {target}")
    v = sub @ vt[rank]
    return _generate(a.algebra, tuple(E), tuple(H), tuple(weights), None, v)


def _is_minuscule(alg: SimpleAlgebraId, hw: HighestWeight) -> bool:
    """Every simple root string has length at most two (unit string coefficients)."""
    wm = weight_multiplicities(alg, hw)
    return all(m == 1 and all(abs(x) <= 1 for x in w) for w, m in wm.items())


@lru_cache(maxsize=None)
def irrep(alg: SimpleAlgebraId, hw: HighestWeight) -> ChevalleyRep:
    """Chevalley realization of V(hw)."""
    s, r = alg.series, alg.rank
    c = hw.coeffs
    if hw.is_zero():
        return ChevalleyRep(alg, hw, tuple(np.zeros((1, 1)) for _ in range(r)),
                            tuple(np.zeros((1, 1)) for _ in range(r)), ((0,) * r,))
    if s in "ADE" and _is_minuscule(alg, hw):
        return _minuscule(alg, hw)
    fund = [i for i, x in enumerate(c) if x]
    if len(fund) == 1 and c[fund[0]] == 1:
        i = fund[0]
        if s in "BCD" and i == 0:
            return _vector_classical(alg)
        if s == "B" and i == r - 1:
            big = irrep(SimpleAlgebraId("D", r + 1), HighestWeight.fundamental(r + 1, r + 1))
            return _fold(alg, big, [[j] for j in range(r - 1)] + [[r - 1, r]])
        if s == "G" and i == 0:
            big = irrep(SimpleAlgebraId("D", 4), HighestWeight.fundamental(4, 1))
            return _fold(alg, big, [[0, 2, 3], [1]])
        # L_{i+1} sits inside L_1 (x) L_i
        if s in "ABCD" and i >= 1:
            return _tensor(irrep(alg, HighestWeight.fundamental(r, 1)),
                           irrep(alg, HighestWeight.fundamental(r, i)), hw)
        if s == "G" and i == 1:
            a = irrep(alg, HighestWeight.fundamental(2, 1))
            return _tensor(a, a, hw)
        raise NotImplementedError(f"no realization route for {alg} {hw}")
    # split off one fundamental weight and take the Cartan component
    i = fund[0]
    first = HighestWeight.fundamental(r, i + 1)
    rest = HighestWeight(tuple(x - (1 if t == i else 0) for t, x in enumerate(c)))
    return _tensor(irrep(alg, first), irrep(alg, rest), hw)


@lru_cache(maxsize=None)
def _root_words(alg: SimpleAlgebraId) -> tuple[tuple[int, ...], ...]:
    """For each positive root (by height) the simple index and parent used to build it."""
    roots = sorted(alg.positive_roots, key=lambda x: (sum(x), x))
    rs = set(roots)
    out = []
    for b in roots:
        if sum(b) == 1:
            out.append((b.index(1), -1))
            continue
        for i in range(alg.rank):
            p = tuple(x - (1 if t == i else 0) for t, x in enumerate(b))
            if p in rs:
                out.append((i, roots.index(p)))
                break
    return tuple(out)


def compact_generators(rep: ChevalleyRep) -> list[np.ndarray]:
    """Fixed real basis of the compact form acting in ``rep``."""
    words = _root_words(rep.algebra)
    ev: list[np.ndarray] = []
    for i, parent in words:
        if parent < 0:
            ev.append(rep.E[i])
        else:
            x = rep.E[i] @ ev[parent] - ev[parent] @ rep.E[i]
            ev.append(x)
    gens = [1j * h.astype(complex) for h in rep.H]
    for x in ev:
        gens.append((x - x.T).astype(complex))
        gens.append(1j * (x + x.T))
    return gens


def module_generators(expr: ModuleExpr) -> list[np.ndarray]:
    """Generators of the compact algebra (ideals, then abelian) acting on the
    module described by a normal-form expression."""
    alg = expr.algebra
    summands = expr.summands()
    blocks = []
    for t in summands:
        per_ideal = []
        dims = []
        for a, f in zip(alg.ideals, t.factors):
            reps = [irrep(a, hw) for hw in f if not hw.is_zero()]
            dims.append(int(np.prod([rp.dim for rp in reps])) if reps else 1)
            if not reps:
                per_ideal.append(None)
                continue
            cg = [compact_generators(rp) for rp in reps]
            acting = []
            for g in range(a.dim):
                x = np.zeros((dims[-1], dims[-1]), complex)
                for j, rp in enumerate(reps):
                    y = np.array([[1.0]])
                    for jj, rr in enumerate(reps):
                        y = np.kron(y, cg[j][g] if jj == j else np.eye(rr.dim))
                    x = x + y
                acting.append(x)
            per_ideal.append(acting)
        blocks.append((per_ideal, dims, t.charges))
    total = sum(int(np.prod(d)) for _, d, _ in blocks)
    n_ideal_gens = [a.dim for a in alg.ideals]
    gens = []
    for s, a in enumerate(alg.ideals):
        for g in range(n_ideal_gens[s]):
            m = np.zeros((total, total), complex)
            off = 0
            for per_ideal, dims, _ in blocks:
                size = int(np.prod(dims))
                if per_ideal[s] is not None:
                    x = np.array([[1.0]])
                    for t, dd in enumerate(dims):
                        x = np.kron(x, per_ideal[s][g] if t == s else np.eye(dd))
                    m[off:off + size, off:off + size] = x
                off += size
            gens.append(m)
    for c in range(alg.abelian_rank):
        diag = []
        for _, dims, ch in blocks:
            diag += [float(ch[c])] * int(np.prod(dims))
        gens.append(1j * np.diag(diag))
    return [g for g in gens if np.linalg.norm(g) > 0]
