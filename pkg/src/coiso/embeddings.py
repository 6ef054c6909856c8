"""Explicit matrix realizations of compact subalgebras of su(n).

Every realization carries, besides a real basis of anti-Hermitian trace-free
generators, the weights of its ambient basis vectors under a maximal torus
(Dynkin labels per simple ideal, integer charges per abelian generator)
whenever that torus is diagonal.  These weights feed the character checks.

Label grammar::

    block(B1,B2,...[;A1;A2...])
        B  = su:d | sp:m | so:m | triv:1 | dsu:m[xr]
        A  = z                      center of s(u(d_0) + u(n - d_0))
           | a                      all block-constant diagonal matrices
           | u(c_0|c_1|...)         one generator with the given block charges
           | line(u(...),u(...),slope=p/q)
                                    the element Z + slope*R
    tensor(p,q)                     su(p) + su(q) acting on C^p (x) C^q
    tensor(X:a,Y:b)                 the same for X, Y in su, sp, so (outer tensor product)
    spin7                           spin(7) on its 8-dimensional spin module
    g2                              g2 inside so(7) on C^7
    su:n, sp:m, so:m                shorthand for block(...) with one block

All abelian generators are projected to trace zero (the identity acts
trivially on every Grassmannian) and stored as primitive integer vectors.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Callable, Sequence

import numpy as np

from .lie import ReductiveAlgebra, SimpleAlgebraId
from .modules import CharPoly, from_epsilon
from .numerics import in_span_residual, lie_rank, numeric_rank, realify

__all__ = [
    "LabelError",
    "BlockSpec",
    "MatrixEmbedding",
    "ScalarLine",
    "VerifyReport",
    "parse_label",
    "realize",
    "realize_scalar_line",
    "verify_embedding",
    "ortho_structure",
    "primitive_vector",
    "ambient_character",
]


class LabelError(ValueError):
    """Unknown or malformed embedding label, or inconsistent dimensions."""


# -- small helpers ---------------------------------------------------------------

def _unit(n: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((n, n), complex)
    m[i, j] = 1
    return m


def primitive_vector(v: Sequence) -> tuple[int, ...]:
    """Smallest integer vector positively proportional to a rational vector."""
    fr = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def _traceless(v: Sequence[Fraction]) -> list[Fraction]:
    mean = sum(v, Fraction(0)) / len(v)
    return [x - mean for x in v]


def _frac(text: str) -> Fraction:
    return Fraction(text.strip())


# -- orthogonal and symplectic structure of small algebras --------------------------

EpsMap = Callable[[Sequence[Fraction]], tuple[list[tuple[int, ...]], list[Fraction]]]


def ortho_structure(m: int) -> tuple[list[SimpleAlgebraId], int, EpsMap]:
    """Ideals of so(m), number of abelian directions, and a map from
    orthogonal coordinates (length m//2) to (Dynkin labels per ideal, charges).

    Low-dimensional coincidences are resolved to the A and C series:
    so(3) = A1 (vector = 2L1), so(4) = A1 + A1, so(5) = C2 (vector = L2),
    so(6) = A3 (vector = L2).
    """
    if m <= 1:
        return [], 0, lambda e: ([], [])
    if m == 2:
        return [], 1, lambda e: ([], [Fraction(e[0])])
    if m == 3:
        return [SimpleAlgebraId("A", 1)], 0, lambda e: ([(int(2 * e[0]),)], [])
    if m == 4:
        a1 = SimpleAlgebraId("A", 1)
        return [a1, a1], 0, lambda e: ([(int(e[0] - e[1]),), (int(e[0] + e[1]),)], [])
    if m == 5:
        b2 = SimpleAlgebraId("B", 2)

        def f5(e):
            b = from_epsilon(b2, e)
            return [(b[1], b[0])], []
        return [SimpleAlgebraId("C", 2)], 0, f5
    if m == 6:
        d3 = SimpleAlgebraId("D", 3)

        def f6(e):
            d = from_epsilon(d3, e)
            return [(d[1], d[0], d[2])], []
        return [SimpleAlgebraId("A", 3)], 0, f6
    alg = SimpleAlgebraId("B" if m % 2 else "D", m // 2)
    return [alg], 0, lambda e: ([from_epsilon(alg, e)], [])


def symp_structure(m: int) -> tuple[list[SimpleAlgebraId], EpsMap]:
    """Ideals of sp(m) and the map from orthogonal coordinates to Dynkin labels."""
    if m == 0:
        return [], lambda e: ([], [])
    if m == 1:
        return [SimpleAlgebraId("A", 1)], lambda e: ([(int(e[0]),)], [])
    alg = SimpleAlgebraId("C", m)
    return [alg], lambda e: ([from_epsilon(alg, e)], [])


def unitary_structure(d: int) -> tuple[list[SimpleAlgebraId], EpsMap]:
    if d <= 1:
        return [], lambda e: ([], [])
    alg = SimpleAlgebraId("A", d - 1)
    return [alg], lambda e: ([from_epsilon(alg, e)], [])


def so_eps(m: int, p: int) -> list[Fraction]:
    """Orthogonal coordinates of basis vector p for so(m) with the antidiagonal form."""
    r = m // 2
    e = [Fraction(0)] * r
    if p < r:
        e[p] = Fraction(1)
    elif p >= m - r:
        e[m - 1 - p] = Fraction(-1)
    return e


def sp_eps(m: int, p: int) -> list[Fraction]:
    """Orthogonal coordinates of basis vector p for sp(m) with J = [[0, I], [-I, 0]]."""
    e = [Fraction(0)] * m
    if p < m:
        e[p] = Fraction(1)
    else:
        e[p - m] = Fraction(-1)
    return e


def su_eps(d: int, p: int) -> list[Fraction]:
    e = [Fraction(0)] * d
    e[p] = Fraction(1)
    return e


# -- generator families -----------------------------------------------------------

def su_generators(d: int) -> list[np.ndarray]:
    g = []
    for i in range(d):
        for j in range(i + 1, d):
            g.append((_unit(d, i, j) - _unit(d, j, i)) / np.sqrt(2))
            g.append(1j * (_unit(d, i, j) + _unit(d, j, i)) / np.sqrt(2))
    for i in range(d - 1):
        h = np.zeros((d, d), complex)
        h[:i + 1, :i + 1] = np.eye(i + 1)
        h[i + 1, i + 1] = -(i + 1)
        g.append(1j * h / np.sqrt((i + 1) * (i + 2)))
    return g


def symplectic_form(m: int) -> np.ndarray:
    j = np.zeros((2 * m, 2 * m))
    j[:m, m:] = np.eye(m)
    j[m:, :m] = -np.eye(m)
    return j


def sp_generators(m: int) -> list[np.ndarray]:
    """Real basis of sp(m) = u(2m) intersected with sp(2m, C), X = [[A, B], [-conj(B), conj(A)]]."""
    out = []
    for a in su_generators(m) + [1j * np.eye(m) / np.sqrt(m)] if m > 0 else []:
        x = np.zeros((2 * m, 2 * m), complex)
        x[:m, :m] = a
        x[m:, m:] = a.conj()
        out.append(x)
    for i in range(m):
        for j in range(i, m):
            s = _unit(m, i, j) + _unit(m, j, i)
            s = s / np.linalg.norm(s)
            for b in (s, 1j * s):
                x = np.zeros((2 * m, 2 * m), complex)
                x[:m, m:] = b
                x[m:, :m] = -b.conj()
                out.append(x / np.sqrt(2))
    return out


def antidiagonal_form(m: int) -> np.ndarray:
    return np.fliplr(np.eye(m))


def so_generators(m: int) -> list[np.ndarray]:
    """Real basis of the compact form of so(m, C) preserving the antidiagonal form."""
    u = np.zeros((m, m), complex)
    r = m // 2
    for i in range(r):
        j = m - 1 - i
        u[i, i] = u[j, i] = 1 / np.sqrt(2)
        u[i, j] = 1j / np.sqrt(2)
        u[j, j] = -1j / np.sqrt(2)
    if m % 2:
        u[r, r] = 1
    out = []
    for a, b in itertools.combinations(range(m), 2):
        x = np.zeros((m, m), complex)
        x[a, b], x[b, a] = 1, -1
        out.append(u @ x @ u.conj().T / np.sqrt(2))
    return out


def _fermion_ops(modes: int) -> list[np.ndarray]:
    dim = 2 ** modes
    ops = []
    for j in range(modes):
        a = np.zeros((dim, dim))
        for s in range(dim):
            if s >> j & 1:
                sign = (-1) ** bin(s & ((1 << j) - 1)).count("1")
                a[s ^ (1 << j), s] = sign
        ops.append(a)
    return ops


def gamma_matrices() -> list[np.ndarray]:
    """Seven Hermitian anticommuting 8x8 matrices on the fermionic Fock space of C^3.

    Basis vector s (a bitmask) is the occupation state with modes in s.
    """
    a = _fermion_ops(3)
    gam = []
    for aj in a:
        gam.append((aj + aj.T).astype(complex))
        gam.append(1j * (aj - aj.T))
    parity = np.diag([(-1) ** bin(s).count("1") for s in range(8)]).astype(complex)
    gam.append(parity)
    return gam


def spin7_generators() -> list[np.ndarray]:
    g = gamma_matrices()
    return [0.5 * g[a] @ g[b] for a, b in itertools.combinations(range(7), 2)]


def g2_generators() -> list[np.ndarray]:
    """g2 as the stabilizer in so(7) of the standard 3-form."""
    terms = [((0, 1, 2), 1), ((0, 3, 4), 1), ((0, 5, 6), 1), ((1, 3, 5), 1),
             ((1, 4, 6), -1), ((2, 3, 6), -1), ((2, 4, 5), -1)]
    phi = np.zeros((7, 7, 7))
    for (i, j, k), s in terms:
        for p in itertools.permutations(range(3)):
            idx = (i, j, k)
            sign = np.linalg.det(np.eye(3)[list(p)])
            phi[idx[p[0]], idx[p[1]], idx[p[2]]] = s * sign
    basis = []
    for a, b in itertools.combinations(range(7), 2):
        x = np.zeros((7, 7))
        x[a, b], x[b, a] = 1, -1
        basis.append(x)
    cols = []
    for x in basis:
        d = (np.einsum("ai,ijk->ajk", x, phi) + np.einsum("aj,ijk->iak", x, phi)
             + np.einsum("ak,ijk->ija", x, phi))
        cols.append(d.ravel())
    a = np.array(cols).T
    _, s, vt = np.linalg.svd(a)
    null = vt[int((s > 1e-9 * s[0]).sum()):]
    # orthonormalize in the coefficient space for a deterministic basis
    q, _ = np.linalg.qr(null.T)
    return [np.tensordot(q[:, c], np.array(basis), 1).astype(complex) for c in range(q.shape[1])]


# -- labels -----------------------------------------------------------------------

@dataclass(frozen=True)
class BlockSpec:
    """One diagonal block of a block embedding."""

    kind: str       # su, sp, so, triv, dsu
    param: int      # d for su, m for sp/so, copies handled by ``copies``
    offset: int = 0
    copies: int = 1

    @property
    def size(self) -> int:
        if self.kind == "sp":
            return 2 * self.param
        if self.kind == "dsu":
            return self.param * self.copies
        return self.param

    def token(self) -> str:
        if self.kind == "dsu":
            return f"dsu:{self.param}" + (f"x{self.copies}" if self.copies != 2 else "")
        return f"{self.kind}:{self.param}"


def _split_top(text: str, sep: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [s.strip() for s in out]


def parse_label(label: str) -> dict:
    """Parse a label into a small dictionary describing the construction."""
    t = label.strip().replace(" ", "")
    m = re.fullmatch(r"(su|sp|so):(\d+)", t)
    if m:
        t = f"block({t})"
    if t == "spin7":
        return {"kind": "spin7"}
    if t == "g2":
        return {"kind": "g2"}
    m = re.fullmatch(r"tensor\((su|sp|so):(\d+),(su|sp|so):(\d+)\)", t)
    if m and not (m.group(1) == m.group(3) == "su"):
        factors = [BlockSpec(m.group(1), int(m.group(2))), BlockSpec(m.group(3), int(m.group(4)))]
        for f in factors:
            if f.kind == "so" and f.param < 3 or f.param < 1 or f.kind == "su" and f.param < 2:
                raise LabelError(f"tensor factor {f.token()} too small in {label!r}")
        return {"kind": "otimes", "factors": factors}
    if m:
        t = f"tensor({m.group(2)},{m.group(4)})"
    m = re.fullmatch(r"tensor\((\d+),(\d+)\)", t)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if p < 2 or q < 2:
            raise LabelError(f"tensor factors must be at least 2 in {label!r}")
        return {"kind": "tensor", "p": p, "q": q}
    m = re.fullmatch(r"block\((.*)\)", t)
    if not m:
        raise LabelError(f"unknown label {label!r}")
    parts = _split_top(m.group(1), ";")
    # "block(su:3;su:3)" lists blocks separated by ";" as well
    block_re = r"(su|sp|so|triv|dsu):\d+(?:x\d+)?"
    lead = [p for p in parts if re.fullmatch(block_re, p)]
    if lead and parts[0] not in lead:
        raise LabelError(f"blocks must come before abelian tokens in {label!r}")
    parts = [",".join([parts[0]] + lead[1:])] + [p for p in parts[1:] if p not in lead]
    blocks = []
    off = 0
    for tok in _split_top(parts[0], ","):
        bm = re.fullmatch(r"(su|sp|so|triv|dsu):(\d+)(?:x(\d+))?", tok)
        if not bm:
            raise LabelError(f"bad block token {tok!r} in {label!r}")
        kind, p = bm.group(1), int(bm.group(2))
        copies = int(bm.group(3)) if bm.group(3) else 2
        if bm.group(3) and kind != "dsu":
            raise LabelError(f"copies only allowed for dsu in {label!r}")
        if kind == "triv" and p != 1:
            raise LabelError("triv blocks have size 1")
        if kind == "su" and p < 1 or kind == "sp" and p < 1 or kind == "so" and p < 3 \
                or kind == "dsu" and (p < 2 or copies < 2):
            raise LabelError(f"block {tok!r} too small")
        if kind == "su" and p == 1:
            kind = "triv"
        b = BlockSpec(kind, p, off, copies if kind == "dsu" else 1)
        blocks.append(b)
        off += b.size
    abel = [a for a in parts[1:] if a]
    return {"kind": "block", "blocks": blocks, "abelian": abel, "n": off}


def _block_charges(tok: str, blocks: Sequence[BlockSpec]) -> list[Fraction]:
    m = re.fullmatch(r"u\((.*)\)", tok)
    if not m:
        raise LabelError(f"bad charge token {tok!r}")
    vals = [_frac(x) for x in m.group(1).split("|")]
    if len(vals) != len(blocks):
        raise LabelError(f"{tok!r} needs {len(blocks)} block charges")
    return vals


def _expand(charges: Sequence[Fraction], blocks: Sequence[BlockSpec]) -> list[Fraction]:
    out = []
    for c, b in zip(charges, blocks):
        out += [Fraction(c)] * b.size
    return out


def _abelian_vectors(tok: str, blocks: Sequence[BlockSpec], n: int) -> list[tuple[int, ...]]:
    if tok in ("z", "center"):
        if len(blocks) < 2:
            raise LabelError("the center z needs at least two blocks")
        d0 = blocks[0].size
        v = [Fraction(-1, d0)] * d0 + [Fraction(1, n - d0)] * (n - d0)
        return [primitive_vector(v)]
    if tok == "a":
        out = []
        d0 = blocks[0].size
        for b in blocks[1:]:
            v = [Fraction(0)] * n
            for i in range(d0):
                v[i] = Fraction(-b.size)
            for i in range(b.offset, b.offset + b.size):
                v[i] = Fraction(d0)
            out.append(primitive_vector(v))
        return out
    if tok.startswith("u("):
        v = _traceless(_expand(_block_charges(tok, blocks), blocks))
        if not any(v):
            raise LabelError(f"{tok!r} is a multiple of the identity")
        return [primitive_vector(v)]
    m = re.fullmatch(r"line\((u\([^)]*\)),(u\([^)]*\)),slope=([-0-9/]+)\)", tok)
    if m:
        z = _block_charges(m.group(1), blocks)
        r = _block_charges(m.group(2), blocks)
        line = realize_scalar_line(([b.size for b in blocks], z, r), _frac(m.group(3)))
        return [line.charges]
    raise LabelError(f"unknown abelian token {tok!r}")


# -- results ------------------------------------------------------------------------

Key = tuple


@dataclass(frozen=True)
class ScalarLine:
    """A line in the plane spanned by two diagonal generators Z and R."""

    slope: Fraction | str
    charges: tuple[int, ...]

    def __post_init__(self):
        if sum(self.charges) != 0:
            raise ValueError("scalar line must be trace free")


def realize_scalar_line(block_data, slope) -> ScalarLine:
    """Integer diagonal generator of the line Z + slope*R.

    ``block_data`` is ``(block sizes, Z charges per block, R charges per block)``.
    Slope ``"center"`` returns the Z axis itself.
    """
    sizes, z, r = block_data
    if len(z) != len(sizes) or len(r) != len(sizes):
        raise LabelError("charge vectors must have one entry per block")
    if isinstance(slope, str):
        if slope not in ("center", "z"):
            raise LabelError(f"slope {slope!r} not representable")
        a = Fraction(0)
    else:
        if isinstance(slope, float):
            raise LabelError("slopes must be rational")
        a = Fraction(slope)
    vals = [Fraction(zz) + a * Fraction(rr) for zz, rr in zip(z, r)]
    full = []
    for v, d in zip(vals, sizes):
        full += [v] * d
    full = _traceless(full)
    if not any(full):
        raise LabelError("line acts trivially")
    return ScalarLine(slope if isinstance(slope, str) else a, primitive_vector(full))


@dataclass
class MatrixEmbedding:
    """A compact subalgebra of su(n) given by a real basis of generators."""

    n: int
    generators: list[np.ndarray]
    abstract: ReductiveAlgebra
    label: str
    kind: str = "block"
    blocks: tuple[BlockSpec, ...] = ()
    abelian: tuple[tuple[int, ...], ...] = ()
    weights: tuple[Key, ...] | None = None
    params: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.generators)

    def semisimple_label(self) -> str:
        """Label of the same construction without abelian generators."""
        if self.kind != "block":
            return self.label
        return "block(" + ",".join(b.token() for b in self.blocks) + ")"


def ambient_character(e: MatrixEmbedding) -> CharPoly:
    """Character of C^n restricted to the torus of the embedding."""
    if e.weights is None:
        raise ValueError(f"no diagonal torus recorded for {e.label}")
    c: dict = {}
    for w in e.weights:
        c[w] = c.get(w, 0) + 1
    return CharPoly(c)


def _block_generators(b: BlockSpec, n: int) -> list[np.ndarray]:
    o = b.offset
    if b.kind == "triv":
        return []
    if b.kind == "su":
        local = su_generators(b.param)
    elif b.kind == "sp":
        local = sp_generators(b.param)
    elif b.kind == "so":
        local = so_generators(b.param)
    else:
        local = [np.kron(np.eye(b.copies), x) for x in su_generators(b.param)]
    out = []
    for x in local:
        m = np.zeros((n, n), complex)
        m[o:o + b.size, o:o + b.size] = x
        out.append(m)
    return out


def _block_structure(b: BlockSpec) -> tuple[list[SimpleAlgebraId], int, Callable[[int], tuple]]:
    """Ideals, abelian count and per-local-index weight function of a block."""
    if b.kind == "triv":
        return [], 0, lambda p: ([], [])
    if b.kind == "su":
        ids, f = unitary_structure(b.param)
        return ids, 0, lambda p: f(su_eps(b.param, p))
    if b.kind == "dsu":
        ids, f = unitary_structure(b.param)
        return ids, 0, lambda p: f(su_eps(b.param, p % b.param))
    if b.kind == "sp":
        ids, f = symp_structure(b.param)
        return ids, 0, lambda p: f(sp_eps(b.param, p))
    ids, ab, f = ortho_structure(b.param)
    return ids, ab, lambda p: f(so_eps(b.param, p))


def _realize_block(spec: dict, label: str) -> MatrixEmbedding:
    blocks, n = spec["blocks"], spec["n"]
    gens, ideals, per_vec = [], [], [[] for _ in range(n)]
    for b in blocks:
        gens += _block_generators(b, n)
        ids, ab, f = _block_structure(b)
        if ab:
            raise LabelError("so:2 blocks are not supported; use an abelian token")
        slot = len(ideals)
        ideals += ids
        for p in range(b.size):
            dyn, _ = f(p)
            per_vec[b.offset + p].append((slot, dyn))
    abel: list[tuple[int, ...]] = []
    for tok in spec["abelian"]:
        abel += _abelian_vectors(tok, blocks, n)
    if abel and numeric_rank(np.array(abel, float)) < len(abel):
        raise LabelError(f"abelian generators of {label!r} are linearly dependent")
    for v in abel:
        gens.append(1j * np.diag(np.array(v, float)) / np.linalg.norm(v))
    weights = []
    for j in range(n):
        dyn = [(0,) * a.rank for a in ideals]
        for slot, ds in per_vec[j]:
            for t, d in enumerate(ds):
                dyn[slot + t] = tuple(d)
        weights.append((tuple(dyn), tuple(Fraction(v[j]) for v in abel)))
    canon = "block(" + ",".join(b.token() for b in blocks)
    if spec["abelian"]:
        canon += ";" + ";".join(spec["abelian"])
    canon += ")"
    return MatrixEmbedding(n, gens, ReductiveAlgebra(tuple(ideals), len(abel)), canon,
                           "block", tuple(blocks), tuple(abel), tuple(weights))


@lru_cache(maxsize=256)
def _realize_cached(label: str) -> MatrixEmbedding:
    spec = parse_label(label)
    kind = spec["kind"]
    if kind == "block":
        return _realize_block(spec, label)
    if kind == "tensor":
        p, q = spec["p"], spec["q"]
        gens = [np.kron(x, np.eye(q)) for x in su_generators(p)]
        gens += [np.kron(np.eye(p), y) for y in su_generators(q)]
        ap, aq = SimpleAlgebraId("A", p - 1), SimpleAlgebraId("A", q - 1)
        weights = []
        for i in range(p):
            for j in range(q):
                weights.append(((from_epsilon(ap, su_eps(p, i)), from_epsilon(aq, su_eps(q, j))), ()))
        return MatrixEmbedding(p * q, gens, ReductiveAlgebra((ap, aq)), f"tensor({p},{q})",
                               "tensor", weights=tuple(weights), params={"p": p, "q": q})
    if kind == "otimes":
        fa, fb = spec["factors"]
        ga, gb = _block_generators(fa, fa.size), _block_generators(fb, fb.size)
        gens = [np.kron(x, np.eye(fb.size)) for x in ga] + [np.kron(np.eye(fa.size), y) for y in gb]
        ida, aba, wa = _block_structure(fa)
        idb, abb, wb = _block_structure(fb)
        if aba or abb:
            raise LabelError("so:2 factors are not supported")
        weights = []
        for i in range(fa.size):
            for j in range(fb.size):
                weights.append((tuple(tuple(d) for d in wa(i)[0]) + tuple(tuple(d) for d in wb(j)[0]), ()))
        lab = f"tensor({fa.token()},{fb.token()})"
        return MatrixEmbedding(fa.size * fb.size, gens, ReductiveAlgebra(tuple(ida + idb)), lab,
                               "otimes", weights=tuple(weights),
                               params={"factors": (fa.token(), fb.token())})
    if kind == "spin7":
        gens = spin7_generators()
        g = gamma_matrices()
        b3 = SimpleAlgebraId("B", 3)
        weights = []
        for s in range(8):
            eps = [Fraction(round((0.5 * g[2 * j] @ g[2 * j + 1])[s, s].imag * 2), 2) for j in range(3)]
            weights.append(((from_epsilon(b3, eps),), ()))
        return MatrixEmbedding(8, gens, ReductiveAlgebra((b3,)), "spin7", "spin7",
                               weights=tuple(weights))
    if kind == "g2":
        return MatrixEmbedding(7, g2_generators(), ReductiveAlgebra((SimpleAlgebraId("G", 2),)),
                               "g2", "g2")
    raise LabelError(f"unknown label {label!r}")


def realize(label: str, n: int | None = None) -> MatrixEmbedding:
    """Realize a catalog label; ``n`` (if given) must match the ambient dimension."""
    e = _realize_cached(label.replace(" ", ""))
    if n is not None and n != e.n:
        raise LabelError(f"label {label!r} lives in su({e.n}), not su({n})")
    return e


# -- verification ---------------------------------------------------------------------

@dataclass
class VerifyReport:
    ok: bool
    dim: int
    rank: int
    failures: list[str]


def verify_embedding(e: MatrixEmbedding, tol: float = 1e-10, seed: int = 0) -> VerifyReport:
    """Structural checks of a realization; failures are collected, never raised."""
    failures: list[str] = []
    gens = e.generators
    try:
        for i, x in enumerate(gens):
            if np.linalg.norm(x + x.conj().T) > tol:
                failures.append(f"generator {i} is not anti-Hermitian")
            if abs(np.trace(x)) > tol:
                failures.append(f"generator {i} is not trace free")
        if len(gens) != e.abstract.dim:
            failures.append(f"{len(gens)} generators but abstract dimension {e.abstract.dim}")
        indep = numeric_rank(np.array([realify(x) for x in gens]), tol) if gens else 0
        if indep != len(gens):
            failures.append(f"generators span only {indep} dimensions")
        for i, j in itertools.combinations(range(len(gens)), 2):
            c = gens[i] @ gens[j] - gens[j] @ gens[i]
            if in_span_residual(c, gens) > max(tol, tol * np.linalg.norm(c)) * 10:
                failures.append(f"bracket of generators {i} and {j} leaves the span")
                break
        r = lie_rank(gens, np.random.default_rng(seed))
        if r != e.abstract.rank:
            failures.append(f"numeric rank {r} differs from abstract rank {e.abstract.rank}")
    except Exception as exc:  # report, never propagate
        failures.append(f"verification crashed: {exc!r}")
        r = -1
    return VerifyReport(not failures, len(gens), r, failures)
