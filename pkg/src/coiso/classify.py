"""Coisotropy classifier combining symbolic filters, slices and the numeric oracle.

``classify_action`` runs, in order,

1. the Borel dimension filter (and the degree bound for simple su(m) irreps),
2. the open-orbit test on Gr(k, n) for simple irreducible embeddings,
3. the slice at the distinguished orbit matched against the multiplicity-free
   tables,
4. the numeric rank oracle.

Whenever a symbolic step decides and the numeric oracle applies, the two
verdicts are compared and ``EngineDisagreement`` is raised if they differ.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Sequence

from .catalog import CatalogInstance, CatalogRow, rows_of
from .embeddings import MatrixEmbedding, ambient_character
from .lie import admissible_A_irreps, borel_dim, dual_weight
from .mftables import MF, MF_MORE_SCALARS, match_mf
from .modules import ModuleExpr, char_decompose
from .numerics import DEFAULT_TOL
from .oracle import (
    MAX_N,
    ActionInstance,
    Certificate,
    DegenerateNumericsError,
    Verdict,
    numeric_certificate,
    numeric_cohomogeneity,
)
from .preho import grassmann_open_orbit
from .slices import SliceError, slice_at_complex_orbit

__all__ = [
    "EngineDisagreement",
    "ONISHCHIK_CANDIDATES",
    "symbolic_verdict",
    "classify_action",
    "InstanceReport",
    "TableReport",
    "regenerate_tables",
]

log = logging.getLogger(__name__)

# Compact groups transitive on a real Grassmannian that are not covered by the
# symmetric cases: the only candidates that can act coisotropically on a
# complex Grassmannian through a real representation.
ONISHCHIK_CANDIDATES = {
    "g2": "G2 in SO(7), transitive on real Grassmannians of 2-planes",
    "spin7": "Spin(7) in SO(8), transitive on real Grassmannians of 2- and 3-planes",
}


class EngineDisagreement(RuntimeError):
    """The symbolic and numeric engines reached different verdicts."""

    def __init__(self, instance: ActionInstance, symbolic: dict, numeric: dict):
        super().__init__(f"engines disagree on {instance.key}: symbolic {symbolic.get('verdict')}, "
                         f"numeric {numeric.get('coisotropic')}")
        self.instance = instance
        self.symbolic = symbolic
        self.numeric = numeric


# -- symbolic pipeline -------------------------------------------------------------------

def _simple_irreducible(e: MatrixEmbedding):
    """(ideal, weight) when a single simple ideal acts irreducibly, else None."""
    if len(e.abstract.ideals) != 1 or e.abstract.abelian_rank:
        return None
    alg = e.abstract.ideals[0]
    if e.kind == "g2":
        from .lie import HighestWeight
        return alg, HighestWeight((1, 0))
    if e.weights is None:
        return None
    expr = char_decompose(ambient_character(e), e.abstract)
    summ = expr.summands()
    if len(summ) != 1:
        return None
    hw = summ[0].irrep(0)
    return (alg, hw) if hw is not None and summ[0].is_normal() else None


def _slice_verdict(expr: ModuleExpr) -> tuple[bool | None, dict]:
    """MF verdict of a slice: True, False, or None when the tables cannot decide."""
    if expr.dim == 0:
        return True, {"match": "zero slice"}
    # every summand on its own must already be multiplicity free
    for i, t in enumerate(expr.summands()):
        single = ModuleExpr(expr.algebra, [t])
        res = match_mf(single)
        if not res.matched and "formal tensor product" not in res.reason:
            return False, {"match": f"summand {i} alone is not multiplicity free ({res.reason})",
                           "rule": "per-summand"}
    res = match_mf(expr)
    info = {"match": res.describe(), "scalar_verdict": res.scalar_verdict}
    if res.scalar_verdict == MF:
        return True, info
    if res.scalar_verdict == MF_MORE_SCALARS:
        return False, info
    if any(b.entry is None and b.reason == "formal tensor product" for b in res.blocks):
        return None, info
    return False, info


def symbolic_verdict(a: ActionInstance, e: MatrixEmbedding | None = None) -> dict:
    """Run the symbolic steps; ``verdict`` is True, False or None (undecided)."""
    e = e or a.embedding
    k, n = a.k, a.n
    out: dict[str, Any] = {"verdict": None, "method": None}
    bd = borel_dim(e.abstract)
    out["borel_dim"] = bd
    out["grassmannian_dim"] = k * (n - k)
    if bd < k * (n - k):
        out.update(verdict=False, method="borel-reject")
        return out
    if e.label in ONISHCHIK_CANDIDATES:
        out["real_grassmannian_candidate"] = ONISHCHIK_CANDIDATES[e.label]
    si = _simple_irreducible(e)
    if si is not None:
        alg, hw = si
        out["irreducible"] = f"{alg} with highest weight {hw}"
        out["complex_type"] = dual_weight(alg, hw) != hw
        if alg.series == "A" and not hw.is_zero():
            adm = admissible_A_irreps(alg.rank + 1, k)
            out["degree_bound_ok"] = hw in adm
            if hw not in adm:
                out.update(verdict=False, method="borel-reject")
                return out
        open_orbit = grassmann_open_orbit((alg, hw) if e.kind == "g2" else e, k)
        out["open_orbit"] = open_orbit
        if not open_orbit:
            out.update(verdict=False, method="preho-reject")
            return out
    try:
        sl = slice_at_complex_orbit(e, k)
    except SliceError as exc:
        out["slice"] = f"not catalogued: {exc}"
        return out
    v, info = _slice_verdict(sl.slice)
    out["slice"] = sl.describe()
    out.update(info)
    if v is not None:
        out.update(verdict=v, method="symbolic-slice")
    return out


# -- classifier ---------------------------------------------------------------------------

def _with_center(e: MatrixEmbedding) -> list[str]:
    if e.kind != "block" or e.abelian or len(e.blocks) < 2:
        return []
    base = e.semisimple_label()[:-1]
    out = [base + ";z)"]
    if len(e.blocks) > 2:
        out.append(base + ";a)")
    return out


def _decide(a: ActionInstance, trials: int, seed: int, tol: float) -> tuple[bool, bool, Certificate]:
    e = a.embedding
    sym = symbolic_verdict(a, e)
    num = None
    if a.n <= MAX_N:
        num = numeric_cohomogeneity(a, trials, seed, tol)
    if sym["verdict"] is None and num is None:
        raise ValueError(f"{a.key}: no symbolic slice and n exceeds the numeric bound {MAX_N}")
    numeric = numeric_certificate(num) if num is not None else {}
    if num is not None:
        numeric["coisotropic"] = num.coisotropic
    if sym["verdict"] is not None and num is not None and sym["verdict"] != num.coisotropic:
        raise EngineDisagreement(a, sym, numeric)
    verdict = sym["verdict"] if sym["verdict"] is not None else num.coisotropic
    method = sym["method"] or "numeric-rank"
    transitive = num.chm == 0 if num is not None else sym.get("match") == "zero slice"
    return verdict, transitive, Certificate(method, numeric, sym)


def classify_action(a: ActionInstance, trials: int = 8, seed: int = 0, tol: float = DEFAULT_TOL,
                    *, minimal: bool = True) -> Verdict:
    """Coisotropy verdict with certificate and a statement about the scalars."""
    coiso, transitive, cert = _decide(a, trials, seed, tol)
    note = "not analysed"
    if minimal:
        e = a.embedding
        if coiso and not e.abelian:
            note = "none needed"
        elif coiso:
            ss = ActionInstance(e.semisimple_label(), a.k, a.n)
            ss_coiso, _, ss_cert = _decide(ss, trials, seed, tol)
            cert.symbolic["semisimple_part"] = {"label": ss.label, "coisotropic": ss_coiso,
                                                "method": ss_cert.method}
            note = ("removable: the semisimple part is already coisotropic" if ss_coiso else
                    f"required: without its {len(e.abelian)}-dimensional abelian part the action "
                    "is not coisotropic")
        else:
            note = "not coisotropic"
            for lab in _with_center(e):
                big = ActionInstance(lab, a.k, a.n)
                if _decide(big, trials, seed, tol)[0]:
                    note = f"not coisotropic; coisotropic after adding the centre ({lab})"
                    break
    return Verdict(coiso, transitive, note, cert)


# -- table regeneration -------------------------------------------------------------------

@dataclass
class InstanceReport:
    row: str
    key: str
    label: str
    k: int
    n: int
    expected: bool
    coisotropic: bool | None = None
    method: str = ""
    symbolic: bool | None = None
    numeric: bool | None = None
    minimal_scalars: str = ""
    chm: int | None = None
    rank_difference: int | None = None
    checks: dict[str, Any] = field(default_factory=dict)
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error and self.coisotropic == self.expected and all(
            v.get("ok", True) for v in self.checks.values() if isinstance(v, dict))

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in ("row", "key", "label", "k", "n", "expected", "coisotropic",
                                           "method", "symbolic", "numeric", "minimal_scalars",
                                           "chm", "rank_difference", "checks", "error")}
        d["ok"] = self.ok
        return d


@dataclass
class TableReport:
    n_max: int
    seed: int
    trials: int
    instances: list[InstanceReport]

    def by_row(self) -> dict[str, list[InstanceReport]]:
        out: dict[str, list[InstanceReport]] = {}
        for r in self.instances:
            out.setdefault(r.row, []).append(r)
        return out

    def agreement_matrix(self) -> dict[str, dict[str, int]]:
        """Per row: instance count, agreements with the expected verdict, engine agreements."""
        out = {}
        for row, items in self.by_row().items():
            both = [i for i in items if i.symbolic is not None and i.numeric is not None]
            out[row] = {"instances": len(items), "as_expected": sum(i.ok for i in items),
                        "both_engines": len(both),
                        "engines_agree": sum(i.symbolic == i.numeric for i in both),
                        "errors": sum(bool(i.error) for i in items)}
        return out

    @property
    def disagreements(self) -> list[InstanceReport]:
        return [i for i in self.instances if not i.ok]

    def to_dict(self) -> dict:
        return {"schema": "v1", "n_max": self.n_max, "seed": self.seed, "trials": self.trials,
                "agreement": self.agreement_matrix(),
                "instances": [i.to_dict() for i in self.instances]}


def _verdict_bits(v: Verdict) -> tuple[bool | None, bool | None]:
    s = v.certificate.symbolic.get("verdict")
    nm = v.certificate.numeric.get("coisotropic")
    return s, nm


def _run_instance(job: tuple[CatalogRow, CatalogInstance, int, int]) -> InstanceReport:
    row, ins, seed, trials = job
    expected = row.table in ("1", "2")
    rep = InstanceReport(row.id, ins.key, ins.label, ins.k, ins.n, expected)
    try:
        v = classify_action(ins.action, trials, seed)
        rep.coisotropic = v.coisotropic
        rep.method = v.certificate.method
        rep.symbolic, rep.numeric = _verdict_bits(v)
        rep.minimal_scalars = v.minimal_scalars
        num = v.certificate.numeric
        if "chm" in num:
            rep.chm, rep.rank_difference = num["chm"], num["group_rank"] - num["isotropy_rank"]
        if row.table == "2":
            ss = v.certificate.symbolic.get("semisimple_part", {})
            rep.checks["scalars_required"] = {"ok": ss.get("coisotropic") is False,
                                              "semisimple": ss.get("label")}
        if row.alpha:
            alpha = row.excluded_slope(ins.env())
            for name, s, want in (("slope_alpha", alpha, False), ("slope_alpha_minus_1", alpha - 1, True),
                                  ("slope_alpha_plus_1", alpha + 1, True)):
                other = row.instance(ins.env(), s)
                c = classify_action(other.action, trials, seed, minimal=False).coisotropic
                rep.checks[name] = {"ok": c == want, "slope": str(s), "coisotropic": c}
    except EngineDisagreement as exc:
        rep.error = f"engine disagreement: symbolic {exc.symbolic.get('verdict')} " \
                    f"({exc.symbolic.get('match', exc.symbolic.get('method'))}), " \
                    f"numeric {exc.numeric.get('coisotropic')}"
        rep.symbolic, rep.numeric = exc.symbolic.get("verdict"), exc.numeric.get("coisotropic")
    except DegenerateNumericsError as exc:
        rep.error = f"degenerate numerics: {exc}"
    return rep


def regenerate_tables(n_max: int = 8, *, tables: Sequence[str] = ("1", "2", "negative"), seed: int = 0,
                      trials: int = 8, workers: int | None = 1) -> TableReport:
    """Classify every catalogued instance with n <= n_max.

    Rows of tables "1" and "2" are expected coisotropic, "negative" rows are
    expected not to be.  Table 2 instances also check that the abelian part
    is required, and scalar-line rows check the excluded slope and its two
    neighbours.  ``workers`` > 1 evaluates instances in parallel processes;
    the report order does not depend on it.
    """
    if n_max > 12:
        raise ValueError("n_max is limited to 12")
    jobs = [(row, ins, seed, trials) for t in tables for row in rows_of(t) for ins in row.instances(n_max)]
    if workers is None:
        workers = min(8, os.cpu_count() or 1)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_instance, jobs, chunksize=4))
    else:
        results = [_run_instance(j) for j in jobs]
    return TableReport(n_max, seed, trials, results)
