"""Numeric rank-condition oracle for actions on complex Grassmannians.

An action of a compact group K on Gr(k, n) is coisotropic exactly when the
cohomogeneity equals rank K minus the rank of a principal isotropy algebra.
Both sides are computed here from random planes with SVD ranks.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

import numpy as np

from .embeddings import MatrixEmbedding, realize
from .numerics import DEFAULT_TOL, lie_rank, numeric_rank, realify

__all__ = [
    "DegenerateNumericsError",
    "ActionInstance",
    "Certificate",
    "Verdict",
    "NumericResult",
    "numeric_cohomogeneity",
    "is_coisotropic_numeric",
    "cohomogeneity_of_generators",
]

log = logging.getLogger(__name__)

MAX_N = 16


class DegenerateNumericsError(RuntimeError):
    """Random samples disagree by more than the tolerated amount."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


@dataclass(frozen=True)
class ActionInstance:
    """K acting on Gr(k, n) through a catalog embedding; k is normalized to k <= n/2."""

    label: str
    k: int
    n: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")
        if self.k > self.n / 2:
            object.__setattr__(self, "k", self.n - self.k)
        if self.k == 1:
            raise ValueError("projective spaces (k = 1) are linear multiplicity-free questions; "
                             "use the mf module instead")
        object.__setattr__(self, "label", self.label.replace(" ", ""))

    @property
    def embedding(self) -> MatrixEmbedding:
        return realize(self.label, self.n)

    @property
    def key(self) -> str:
        return f"{self.label}@Gr({self.k},{self.n})"


@dataclass
class Certificate:
    """Evidence behind a verdict; numeric parts replay from the recorded seed."""

    method: str
    numeric: dict[str, Any] = field(default_factory=dict)
    symbolic: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class Verdict:
    coisotropic: bool
    transitive: bool
    minimal_scalars: str
    certificate: Certificate

    def __post_init__(self):
        if self.transitive and not self.coisotropic:
            raise ValueError("a transitive action is coisotropic")

    def to_dict(self) -> dict:
        return {"coisotropic": self.coisotropic, "transitive": self.transitive,
                "minimal_scalars": self.minimal_scalars, "certificate": self.certificate.to_dict()}


@dataclass(frozen=True)
class NumericResult:
    orbit_dim: int
    chm: int
    isotropy_rank: int
    group_rank: int
    orbit_dims: tuple[int, ...]
    seed: int
    trials: int
    tol: float

    @property
    def coisotropic(self) -> bool:
        return self.chm == self.group_rank - self.isotropy_rank


def _random_frame(rng: np.random.Generator, n: int) -> np.ndarray:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, _ = np.linalg.qr(z)
    return q


def _tangent_matrix(gens: Sequence[np.ndarray], frame: np.ndarray, k: int) -> np.ndarray:
    """Real matrix of X -> (component of X restricted to the plane, in the complement)."""
    p, q = frame[:, :k], frame[:, k:]
    return np.array([realify(q.conj().T @ x @ p) for x in gens]).T


def cohomogeneity_of_generators(gens: Sequence[np.ndarray], k: int, n: int, *, trials: int = 8,
                                seed: int = 0, tol: float = DEFAULT_TOL) -> NumericResult:
    """Core oracle on raw generators (k = 1 allowed, used for projective spaces)."""
    gens = list(gens)
    rng = np.random.default_rng(seed)
    dim_gr = 2 * k * (n - k)
    if not gens:
        return NumericResult(0, dim_gr, 0, 0, (0,) * trials, seed, trials, tol)
    ranks, mats = [], []
    for _ in range(trials):
        a = _tangent_matrix(gens, _random_frame(rng, n), k)
        ranks.append(numeric_rank(a, tol))
        mats.append(a)
    best = int(np.argmax(ranks))
    if max(ranks) - min(ranks) > 1:
        raise DegenerateNumericsError(
            f"orbit dimensions vary across samples: {ranks}",
            {"orbit_dims": ranks, "seed": seed, "tol": tol})
    if len(set(ranks)) > 1:
        log.info("orbit dimension varied by one across samples: %s", ranks)
    a = mats[best]
    r = ranks[best]
    _, s, vt = np.linalg.svd(a)
    kernel = vt[r:]
    g = np.array(gens)
    iso = [np.tensordot(v, g, 1) for v in kernel]
    grank = lie_rank(gens, rng, tol=tol)
    irank = lie_rank(iso, rng, tol=tol)
    return NumericResult(r, dim_gr - r, irank, grank, tuple(ranks), seed, trials, tol)


def numeric_cohomogeneity(a: ActionInstance, trials: int = 8, seed: int = 0,
                          tol: float = DEFAULT_TOL) -> NumericResult:
    """Orbit dimension, cohomogeneity and ranks of K and a principal isotropy algebra."""
    if a.n > MAX_N:
        raise ValueError(f"n = {a.n} exceeds the desk-scale bound {MAX_N}")
    return cohomogeneity_of_generators(a.embedding.generators, a.k, a.n,
                                       trials=trials, seed=seed, tol=tol)


def numeric_certificate(res: NumericResult) -> dict:
    return {"orbit_dim": res.orbit_dim, "chm": res.chm, "group_rank": res.group_rank,
            "isotropy_rank": res.isotropy_rank, "orbit_dims": list(res.orbit_dims),
            "seed": res.seed, "trials": res.trials, "tol": res.tol}


def is_coisotropic_numeric(a: ActionInstance, trials: int = 8, seed: int = 0,
                           tol: float = DEFAULT_TOL) -> Verdict:
    res = numeric_cohomogeneity(a, trials, seed, tol)
    transitive = res.chm == 0
    return Verdict(res.coisotropic, transitive, "as given",
                   Certificate("numeric-rank", numeric_certificate(res)))
