"""Polarity of coisotropic actions on complex Grassmannians.

A polar action on an irreducible compact homogeneous Kaehler manifold is
coisotropic, so only coisotropic actions need to be examined.  The verdict
uses the following facts, in order:

* symmetric subgroups of SU(n) (SO(n), Sp(m) in SU(2m) and S(U(l) x U(n-l)),
  the latter also without its centre when l != n - l) act hyperpolarly, and
  so does SU(l) x SU(l) on Gr(k, 2l) for k < l, which has the same orbits as
  S(U(l) x U(l));
* Spin(7) on Gr(2, 8) has the orbits of U(3), which is not polar;
* an indecomposable reducible slice from Table IIa or IIb is never a polar
  representation, so such actions are not polar;
* Sp(n) on Gr(2, 2n+1) is rejected by an explicit Lie triple system test: the
  would-be section through two explicit tangent vectors is not totally
  geodesic.

Independently, ``numeric_polar_check`` tests the polarity criterion for
actions on symmetric spaces at a random principal point: the normal space nu
of the orbit must be a Lie triple system with [nu, nu] orthogonal to k, and
the action is hyperpolar when nu is moreover abelian.  Both verdicts are
compared whenever a rule applies and n is at desk scale; the criterion alone
decides the remaining cases.  Without it such cases are reported as
undecided rather than guessed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .catalog import CatalogInstance, rows_of
from .classify import EngineDisagreement, classify_action
from .embeddings import MatrixEmbedding
from .mftables import match_mf
from .numerics import DEFAULT_TOL, exact_rank, numeric_rank, realify
from .oracle import MAX_N, ActionInstance, DegenerateNumericsError, Verdict, _random_frame
from .slices import SliceError, slice_at_complex_orbit

__all__ = [
    "PolarVerdict",
    "PolarDomainError",
    "REASONS",
    "polar_check",
    "symbolic_polar",
    "symmetric_subgroup",
    "lie_triple_test",
    "sp_section_vectors",
    "cartan_flat",
    "NumericPolarResult",
    "numeric_polar_check",
    "PolarInstanceReport",
    "PolarTableReport",
    "regenerate_polar_table",
]

REASONS = ("symmetric-pair", "bergmann-reject", "orbit-equivalence-reject", "lie-triple-reject",
           "numeric-criterion", "not-coisotropic", "transitive", "undecided")

POLAR_TOL = 1e-6


class PolarDomainError(ValueError):
    """A matrix handed to the Lie triple test is not in the tangent part m."""


@dataclass(frozen=True)
class PolarVerdict:
    polar: bool
    hyperpolar: bool
    reason: str
    detail: str = ""
    numeric: dict | None = None

    def __post_init__(self):
        if self.reason not in REASONS:
            raise ValueError(f"unknown reason {self.reason!r}")
        if self.hyperpolar and not self.polar:
            raise ValueError("a hyperpolar action is polar")

    @property
    def decided(self) -> bool:
        return self.reason != "undecided"

    def to_dict(self) -> dict:
        return {"polar": self.polar, "hyperpolar": self.hyperpolar, "reason": self.reason,
                "detail": self.detail, "numeric": self.numeric}


# -- Lie triple systems ------------------------------------------------------------------

def _as_gaussian(m) -> tuple[np.ndarray, np.ndarray]:
    """Split a matrix with Gaussian-integer entries into exact integer parts."""
    a = np.asarray(m)
    re, im = np.real(a), np.imag(a)
    if not (np.all(re == np.round(re)) and np.all(im == np.round(im))):
        raise PolarDomainError("entries must be Gaussian integers")
    return np.round(re).astype(object), np.round(im).astype(object)


def _gmul(x, y):
    (a, b), (c, d) = x, y
    return (a.dot(c) - b.dot(d), a.dot(d) + b.dot(c))


def _gbracket(x, y):
    p, q = _gmul(x, y), _gmul(y, x)
    return (p[0] - q[0], p[1] - q[1])


def _flat(x) -> list[Fraction]:
    return [Fraction(int(v)) for v in np.concatenate([x[0].ravel(), x[1].ravel()])]


def _check_tangent(x, k: int) -> None:
    re, im = x
    n = re.shape[0]
    if re.shape != (n, n) or not 0 < k < n:
        raise PolarDomainError(f"expected square matrices with 0 < k < n, got shape {re.shape}, k = {k}")
    if np.any(re + re.T != 0) or np.any(im - im.T != 0):
        raise PolarDomainError("tangent vectors must be skew-Hermitian")
    if np.any(re[:k, :k] != 0) or np.any(im[:k, :k] != 0) or np.any(re[k:, k:] != 0) \
            or np.any(im[k:, k:] != 0):
        raise PolarDomainError("tangent vectors must vanish on the diagonal blocks")


def lie_triple_test(m_basis: Sequence, k: int) -> bool:
    """Whether span_R(m_basis) is a Lie triple system of su(n) / s(u(k) x u(n-k)).

    The matrices are n x n with Gaussian-integer entries and must lie in the
    tangent part m: skew-Hermitian and zero on the two diagonal blocks of
    sizes k and n - k.  The test checks [[X, Y], Z] in the real span for all
    basis triples, in exact integer arithmetic.
    """
    basis = [_as_gaussian(m) for m in m_basis]
    if not basis:
        return True
    for x in basis:
        _check_tangent(x, k)
    rows = [_flat(x) for x in basis]
    r = exact_rank(rows)
    for i, x in enumerate(basis):
        for j in range(i + 1, len(basis)):
            xy = _gbracket(x, basis[j])
            for z in basis:
                t = _gbracket(xy, z)
                if exact_rank(rows + [_flat(t)]) > r:
                    return False
    return True


def sp_section_vectors(n: int) -> list[np.ndarray]:
    """Tangent vectors at pi = span(e_1, e_2) in Gr(2, 2n+1) spanning the
    candidate section of Sp(n): one direction of the slice Lambda^2(pi*) and
    one direction normal to Gr(2, 2n)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    size = 2 * n + 1
    v1 = np.zeros((size, size), dtype=int)
    v1[0, 3], v1[1, 2], v1[2, 1], v1[3, 0] = 1, -1, 1, -1
    v2 = np.zeros((size, size), dtype=int)
    v2[0, size - 1], v2[size - 1, 0] = 1, -1
    return [v1, v2]


def cartan_flat(k: int, n: int) -> list[np.ndarray]:
    """Standard maximal flat of Gr(k, n) at the coordinate plane."""
    out = []
    for j in range(min(k, n - k)):
        x = np.zeros((n, n), dtype=int)
        x[j, k + j], x[k + j, j] = 1, -1
        out.append(x)
    return out


# -- numeric criterion -------------------------------------------------------------------

@dataclass(frozen=True)
class NumericPolarResult:
    polar: bool
    hyperpolar: bool
    section_dim: int
    triple_residual: float
    orthogonality_residual: float
    bracket_norm: float
    seed: int
    trials: int

    def to_dict(self) -> dict:
        return {f: getattr(self, f) for f in ("polar", "hyperpolar", "section_dim", "triple_residual",
                                              "orthogonality_residual", "bracket_norm", "seed", "trials")}


def _tangent_to_matrix(c: np.ndarray, k: int, n: int) -> np.ndarray:
    """Element of m with lower-left block ``c`` ((n - k) x k)."""
    y = np.zeros((n, n), dtype=complex)
    y[k:, :k] = c
    y[:k, k:] = -c.conj().T
    return y


def _criterion(gens: Sequence[np.ndarray], frame: np.ndarray, k: int, n: int, tol: float):
    kk = [frame.conj().T @ g @ frame for g in gens]
    t = np.array([realify(x[k:, :k]) for x in kk]) if kk else np.zeros((0, 2 * k * (n - k)))
    r = numeric_rank(t, tol) if len(kk) else 0
    _, _, vt = np.linalg.svd(t if len(kk) else np.zeros((1, 2 * k * (n - k))), full_matrices=True)
    nu = vt[r:] if len(kk) else np.eye(2 * k * (n - k))
    half = k * (n - k)
    normal = [_tangent_to_matrix((v[:half] + 1j * v[half:]).reshape(n - k, k), k, n) for v in nu]
    knorm = [x / np.linalg.norm(x) for x in kk if np.linalg.norm(x) > 0]
    triple = orth = brack = 0.0
    for i, x in enumerate(normal):
        for j in range(i + 1, len(normal)):
            c = x @ normal[j] - normal[j] @ x
            brack = max(brack, float(np.linalg.norm(c)))
            for g in knorm:
                orth = max(orth, abs(float(np.vdot(g, c).real)))
            for z in normal:
                w = realify((c @ z - z @ c)[k:, :k])
                triple = max(triple, float(np.linalg.norm(w - nu.T @ (nu @ w))))
    return r, len(normal), triple, orth, brack


def numeric_polar_check(a: ActionInstance, trials: int = 8, seed: int = 0,
                        tol: float = DEFAULT_TOL, polar_tol: float = POLAR_TOL) -> NumericPolarResult:
    """Polarity criterion at random principal points of Gr(k, n).

    Each random unitary frame moves a random plane to the base point; the
    orbit tangent there is the lower-left block of the conjugated generators
    and the normal space nu is its orthogonal complement.  Samples with the
    largest orbit dimension are principal; their verdicts must agree.
    """
    if a.n > MAX_N:
        raise ValueError(f"n = {a.n} exceeds the desk-scale bound {MAX_N}")
    gens = a.embedding.generators
    rng = np.random.default_rng(seed)
    samples = [_criterion(gens, _random_frame(rng, a.n), a.k, a.n, tol) for _ in range(trials)]
    top = max(x[0] for x in samples)
    principal = [x for x in samples if x[0] == top]
    verdicts = {(x[2] < polar_tol and x[3] < polar_tol, x[4] < polar_tol) for x in principal}
    if len(verdicts) > 1:
        raise DegenerateNumericsError("polarity criterion differs between principal samples",
                                      {"samples": [x[1:] for x in principal], "seed": seed})
    (polar, flat), = verdicts
    _, dim, triple, orth, brack = max(principal, key=lambda x: max(x[2], x[3]))
    return NumericPolarResult(polar, polar and flat, dim, triple, orth, brack, seed, trials)


# -- verdicts ----------------------------------------------------------------------------

def symmetric_subgroup(e: MatrixEmbedding) -> str | None:
    """Name of the symmetric subgroup of SU(n) realized by ``e`` (possibly
    without its centre, when the centre is not needed), else None."""
    if e.kind != "block":
        return None
    blocks = e.blocks
    if len(blocks) == 1 and not e.abelian:
        b = blocks[0]
        if b.kind == "so" and b.size == e.n:
            return f"so({e.n})"
        if b.kind == "sp" and b.size == e.n:
            return f"sp({b.param})"
    if len(blocks) == 2 and all(b.kind == "su" or (b.kind == "triv" and b.param == 1) for b in blocks):
        l, m = blocks[0].size, blocks[1].size
        if e.abelian:
            return f"s(u({l}) + u({m}))"
        if l != m:
            return f"su({l}) + su({m})"
    return None


def _equal_blocks_without_centre(e: MatrixEmbedding, k: int) -> bool:
    """su(l) + su(l) on Gr(k, 2l) with k < l has the orbits of s(u(l) + u(l)):
    a k-plane projects to subspaces of dimension below l in both factors, so
    any central phase is matched by an element of SU(l) x SU(l)."""
    if e.kind != "block" or e.abelian or len(e.blocks) != 2:
        return False
    a, b = e.blocks
    return a.kind == b.kind == "su" and a.size == b.size and k < a.size


_CAPACITY = {"su": lambda b: b.param, "triv": lambda b: 1, "sp": lambda b: b.param,
             "so": lambda b: b.param // 2}


def _splits(e: MatrixEmbedding, k: int):
    """All distributions of k over the blocks that give a complex orbit."""
    if e.kind != "block":
        yield None
        return
    if any(b.kind not in _CAPACITY for b in e.blocks):
        return
    caps = [_CAPACITY[b.kind](b) * b.copies for b in e.blocks]
    for split in itertools.product(*(range(c + 1) for c in caps)):
        if sum(split) == k:
            yield split


def _slice_blocks(e: MatrixEmbedding, k: int) -> list[str]:
    """Table II blocks in the slice at some complex orbit (first one found)."""
    for split in _splits(e, k):
        try:
            sl = slice_at_complex_orbit(e, k, split=split) if split else slice_at_complex_orbit(e, k)
        except SliceError:
            continue
        res = match_mf(sl.slice)
        bad = [b.entry.id for b in res.blocks if b.entry is not None and b.entry.table in ("IIa", "IIb")]
        if bad:
            return bad
    return []


def _sp_point(e: MatrixEmbedding) -> int | None:
    if e.kind == "block" and not e.abelian and len(e.blocks) == 2:
        a, b = e.blocks
        if a.kind == "sp" and b.kind == "triv" and b.param == 1:
            return a.param
    return None


def symbolic_polar(a: ActionInstance) -> PolarVerdict | None:
    """Catalogued rules for a coisotropic, non-transitive action; None if none applies."""
    e = a.embedding
    sym = symmetric_subgroup(e)
    if sym is not None:
        return PolarVerdict(True, True, "symmetric-pair", f"{sym} is a symmetric subalgebra of su({a.n})")
    if _equal_blocks_without_centre(e, a.k):
        l = e.blocks[0].size
        return PolarVerdict(True, True, "symmetric-pair",
                            f"same orbits as the symmetric subalgebra s(u({l}) + u({l})) since k < {l}")
    if e.kind == "spin7":
        return PolarVerdict(False, False, "orbit-equivalence-reject",
                            "spin(7) has the orbits of u(3), which is not polar")
    bad = _slice_blocks(e, a.k)
    if bad:
        return PolarVerdict(False, False, "bergmann-reject",
                            "a slice contains the indecomposable reducible block " + ", ".join(bad))
    m = _sp_point(e)
    if m is not None and a.k == 2 and not lie_triple_test(sp_section_vectors(m), 2):
        return PolarVerdict(False, False, "lie-triple-reject",
                            "the candidate section through the slice is not totally geodesic")
    return None


def polar_check(a: ActionInstance, verdict: Verdict | None = None, *, trials: int = 8, seed: int = 0,
                tol: float = DEFAULT_TOL) -> PolarVerdict:
    """Polarity verdict (coisotropy is decided first, since polar implies coisotropic).

    Raises ``EngineDisagreement`` when a catalogued rule and the numeric
    criterion disagree.
    """
    v = verdict or classify_action(a, trials, seed, tol, minimal=False)
    if not v.coisotropic:
        return PolarVerdict(False, False, "not-coisotropic")
    if v.transitive:
        return PolarVerdict(True, True, "transitive", "a point is a flat section")
    sym = symbolic_polar(a)
    num = numeric_polar_check(a, trials, seed, tol) if a.n <= MAX_N else None
    numeric = num.to_dict() if num else None
    if sym is not None and num is not None and (sym.polar, sym.hyperpolar) != (num.polar, num.hyperpolar):
        raise EngineDisagreement(a, {"verdict": sym.polar, **sym.to_dict()}, {"coisotropic": num.polar, **numeric})
    if sym is not None:
        return PolarVerdict(sym.polar, sym.hyperpolar, sym.reason, sym.detail, numeric)
    if num is not None:
        return PolarVerdict(num.polar, num.hyperpolar, "numeric-criterion",
                            "no catalogued rule applies; decided by the normal-space criterion", numeric)
    return PolarVerdict(False, False, "undecided", "no catalogued rule applies and n is beyond desk scale")


# -- Table 3 regeneration ------------------------------------------------------------------

@dataclass
class PolarInstanceReport:
    row: str
    key: str
    label: str
    k: int
    n: int
    coisotropic: bool
    expected_polar: bool
    polar: bool
    hyperpolar: bool
    reason: str

    @property
    def ok(self) -> bool:
        return self.reason != "undecided" and self.polar == self.expected_polar and \
            (self.coisotropic or not self.polar)

    def to_dict(self) -> dict:
        d = {f: getattr(self, f) for f in ("row", "key", "label", "k", "n", "coisotropic",
                                           "expected_polar", "polar", "hyperpolar", "reason")}
        d["ok"] = self.ok
        return d


@dataclass
class PolarTableReport:
    n_max: int
    instances: list[PolarInstanceReport] = field(default_factory=list)

    def failures(self) -> list[PolarInstanceReport]:
        return [r for r in self.instances if not r.ok]

    def polar_families(self) -> list[str]:
        """Catalog rows with at least one polar instance."""
        return sorted({r.row for r in self.instances if r.polar})

    def to_dict(self) -> dict[str, Any]:
        return {"schema": "v1", "n_max": self.n_max, "instances": [r.to_dict() for r in self.instances],
                "failures": [r.key for r in self.failures()]}


def _polar_instance(inst: CatalogInstance, expected: bool, trials: int, seed: int) -> PolarInstanceReport:
    a = inst.action
    v = classify_action(a, trials, seed, minimal=False)
    p = polar_check(a, v)
    return PolarInstanceReport(inst.row_id, inst.key, inst.label, a.k, a.n, v.coisotropic, expected,
                               p.polar, p.hyperpolar, p.reason)


def regenerate_polar_table(n_max: int = 10, *, seed: int = 0, trials: int = 8) -> PolarTableReport:
    """Polar verdicts for every coisotropic catalog instance with n <= n_max.

    Instances of Tables 1 and 2 are expected polar exactly when their row is
    marked as a Table 3 family; every Table 3 instance is expected polar.
    """
    if n_max > 12:
        raise ValueError("n_max is limited to 12")
    rep = PolarTableReport(n_max)
    seen = set()
    for table in ("3", "1", "2"):
        for row in rows_of(table):
            for env in row.bindings(n_max):
                inst = row.instance(env)
                if inst.key in seen:
                    continue
                seen.add(inst.key)
                expected = True if table == "3" else row.expected_polar(env)
                r = _polar_instance(inst, expected, trials, seed)
                if r.coisotropic or r.expected_polar:
                    rep.instances.append(r)
    return rep
