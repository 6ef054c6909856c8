"""Small numerical linear algebra helpers shared by the numeric oracles."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

DEFAULT_TOL = 1e-8


def realify(m: np.ndarray) -> np.ndarray:
    """Flatten a complex array into a real vector (real parts, then imaginary parts)."""
    m = np.asarray(m)
    return np.concatenate([m.real.ravel(), m.imag.ravel()])


def numeric_rank(a: np.ndarray, tol: float = DEFAULT_TOL) -> int:
    """Rank counting singular values above ``tol`` times the largest one."""
    a = np.asarray(a)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s[0] == 0:
        return 0
    return int((s > tol * s[0]).sum())


def complex_rank(vectors: Sequence[np.ndarray], tol: float = DEFAULT_TOL) -> int:
    """Complex dimension of the span of the given complex vectors."""
    if len(vectors) == 0:
        return 0
    return numeric_rank(np.array([np.ravel(v) for v in vectors]), tol)


def real_span_basis(mats: Sequence[np.ndarray], tol: float = DEFAULT_TOL) -> list[np.ndarray]:
    """Orthonormal real basis (as complex matrices) of the real span of ``mats``."""
    if not mats:
        return []
    shape = mats[0].shape
    a = np.array([realify(m) for m in mats])
    _, s, vt = np.linalg.svd(a, full_matrices=False)
    r = int((s > tol * s[0]).sum()) if s.size and s[0] > 0 else 0
    half = int(np.prod(shape))
    return [(v[:half] + 1j * v[half:]).reshape(shape) for v in vt[:r]]


def ad_kernel_dim(y: np.ndarray, gens: Sequence[np.ndarray], tol: float = DEFAULT_TOL) -> int:
    """Dimension of the centralizer of ``y`` inside the real span of ``gens``.

    The threshold is scaled by the operand norms rather than by the largest
    singular value: for an abelian algebra every commutator vanishes and a
    relative cut would misreport the kernel as trivial.
    """
    d = len(gens)
    if d == 0:
        return 0
    cols = np.array([realify(y @ z - z @ y) for z in gens]).T
    scale = np.linalg.norm(y) * max(np.linalg.norm(z) for z in gens)
    if scale == 0:
        return d
    s = np.linalg.svd(cols, compute_uv=False)
    return d - int((s > tol * scale).sum())


def lie_rank(gens: Sequence[np.ndarray], rng: np.random.Generator, samples: int = 8,
             tol: float = DEFAULT_TOL) -> int:
    """Rank of the Lie algebra spanned by ``gens``: minimal centralizer dimension
    of a random element."""
    if len(gens) == 0:
        return 0
    g = np.array(gens)
    best = len(gens)
    for _ in range(samples):
        y = np.tensordot(rng.standard_normal(len(gens)), g, 1)
        best = min(best, ad_kernel_dim(y, gens, tol))
    return best


def in_span_residual(x: np.ndarray, basis: Sequence[np.ndarray]) -> float:
    """Distance from ``x`` to the real span of ``basis`` (least squares)."""
    if not basis:
        return float(np.linalg.norm(x))
    a = np.array([realify(b) for b in basis]).T
    v = realify(x)
    coef, *_ = np.linalg.lstsq(a, v, rcond=None)
    return float(np.linalg.norm(a @ coef - v))


def exact_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a list of rows of exact rationals (Gauss-Jordan elimination)."""
    m = [list(r) for r in rows if any(r)]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank
