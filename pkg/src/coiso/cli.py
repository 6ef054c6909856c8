"""Command-line front end: ``coiso <command> ...``.

Commands
  check       coisotropy (and polarity) of an embedding on Gr(k, n)
  polar       polarity verdict only
  preho       prehomogeneity, castling and Table V lookup of a triplet
  mf          multiplicity freeness of a module
  tables      regenerate Tables 1, 2 and 3 and the negative controls
  dump-table  print a data table (Ia, Ib, IIa, IIb, V, 1, 2, 3, negative, monotone)

Exit codes: 0 when verdicts are decided, 1 on usage or data errors, 2 when
the symbolic and numeric engines disagree, 3 on degenerate numerics.  The
environment variable COISO_DATA_DIR points to an alternative data directory.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .catalog import CatalogError, load_catalog, rows_of
from .classify import EngineDisagreement, classify_action, regenerate_tables
from .embeddings import LabelError
from .mftables import load_table, match_mf, numeric_mf_check, parse_module, table_rows
from .numerics import DEFAULT_TOL
from .oracle import ActionInstance, DegenerateNumericsError
from .polar import polar_check, regenerate_polar_table
from .preho import (
    castlable_factors,
    castle,
    is_reduced,
    load_table_v,
    lookup_tableV,
    numeric_preho_check,
    parse_triplet,
    reduce,
    table_v_rows,
)
from .report import SCHEMA, render_figures, tables_json, tables_markdown

__all__ = ["RunConfig", "run", "main", "validate_data", "EXIT_OK", "EXIT_USAGE", "EXIT_DISAGREEMENT",
           "EXIT_DEGENERATE"]

EXIT_OK, EXIT_USAGE, EXIT_DISAGREEMENT, EXIT_DEGENERATE = 0, 1, 2, 3
MF_TABLES = ("Ia", "Ib", "IIa", "IIb")
CATALOG_TABLES = ("1", "2", "3", "negative", "monotone")


@dataclass
class RunConfig:
    command: str
    embedding: str | None = None
    k: int | None = None
    n: int | None = None
    n_max: int = 8
    seed: int = 0
    trials: int = 8
    tolerance: float = DEFAULT_TOL
    format: str = "text"
    polar: bool = True
    module: str | None = None
    scalars: str = "full"
    triplet: str | None = None
    table: str | None = None
    output: str | None = None
    figures: str | None = None
    workers: int = 1


def validate_data() -> None:
    """Load every data file (honouring COISO_DATA_DIR) and validate it."""
    load_table()
    load_table_v()
    load_catalog()


def _dump(data: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=1, sort_keys=True) + "\n"
    lines = []
    for key, value in data.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        elif isinstance(value, bool):
            value = str(value).lower()
        lines.append(f"{key}={value}")
    return "\n".join(lines) + "\n"


def _action(cfg: RunConfig) -> ActionInstance:
    if cfg.embedding is None or cfg.k is None or cfg.n is None:
        raise ValueError("--embedding, --k and --n are required")
    return ActionInstance(cfg.embedding, cfg.k, cfg.n)


def _run_check(cfg: RunConfig) -> str:
    a = _action(cfg)
    v = classify_action(a, cfg.trials, cfg.seed, cfg.tolerance)
    data = {"schema": SCHEMA, "embedding": a.label, "k": a.k, "n": a.n, "coisotropic": v.coisotropic,
            "transitive": v.transitive, "minimal_scalars": v.minimal_scalars}
    if cfg.polar:
        p = polar_check(a, v, trials=cfg.trials, seed=cfg.seed, tol=cfg.tolerance)
        data.update(polar=p.polar, hyperpolar=p.hyperpolar, polar_reason=p.reason)
    data["method"] = v.certificate.method
    data["config"] = {"seed": cfg.seed, "trials": cfg.trials, "tolerance": cfg.tolerance}
    if cfg.format == "json":
        data["certificate"] = v.certificate.to_dict()
    return _dump(data, cfg.format)


def _run_polar(cfg: RunConfig) -> str:
    a = _action(cfg)
    p = polar_check(a, trials=cfg.trials, seed=cfg.seed, tol=cfg.tolerance)
    data = {"schema": SCHEMA, "embedding": a.label, "k": a.k, "n": a.n, **p.to_dict()}
    if cfg.format != "json":
        data.pop("numeric")
    return _dump(data, cfg.format)


def _run_preho(cfg: RunConfig) -> str:
    if not cfg.triplet:
        raise ValueError("--triplet is required")
    t = parse_triplet(cfg.triplet)
    r = reduce(t)
    hit = lookup_tableV(t)
    data = {"schema": SCHEMA, "triplet": t.describe(), "dim": t.space_dim,
            "prehomogeneous_numeric": numeric_preho_check(t.rep, cfg.trials, cfg.seed, cfg.tolerance)
            if t.space_dim <= 128 else None,
            "reduced": is_reduced(t), "reduced_form": r.describe(),
            "castling_partners": [castle(t, i).describe() for i in castlable_factors(t)],
            "table_v": f"{hit[0].id} {hit[0].display} {hit[1]}" if hit else None}
    return _dump(data, cfg.format)


def _run_mf(cfg: RunConfig) -> str:
    if not cfg.module:
        raise ValueError("--module is required")
    expr = parse_module(cfg.module, cfg.scalars)
    res = match_mf(expr)
    data = {"schema": SCHEMA, "module": cfg.module, "dim": expr.dim, "verdict": res.scalar_verdict,
            "match": res.describe()}
    if expr.dim <= 64:
        data["numeric_mf"] = numeric_mf_check(expr, trials=cfg.trials, seed=cfg.seed, tol=cfg.tolerance)
    return _dump(data, cfg.format)


def _run_tables(cfg: RunConfig) -> tuple[str, int]:
    rep = regenerate_tables(cfg.n_max, seed=cfg.seed, trials=cfg.trials, workers=cfg.workers)
    polar = regenerate_polar_table(cfg.n_max, seed=cfg.seed, trials=cfg.trials) if cfg.polar else None
    text = tables_json(rep, polar) if cfg.format == "json" else tables_markdown(rep, polar)
    if cfg.figures:
        render_figures(rep, cfg.figures, polar)
    code = EXIT_OK
    if any(i.error.startswith("engine disagreement") for i in rep.instances):
        code = EXIT_DISAGREEMENT
    elif any(i.error.startswith("degenerate") for i in rep.instances):
        code = EXIT_DEGENERATE
    return text, code


def _run_dump(cfg: RunConfig) -> str:
    tid = cfg.table
    if tid in MF_TABLES:
        rows = [e.to_dict() for e in table_rows() if e.table == tid]
    elif tid == "V":
        rows = [r.to_dict() for r in table_v_rows()]
    elif tid in CATALOG_TABLES:
        rows = [r.to_dict() for r in rows_of(tid)]
    else:
        raise ValueError(f"unknown table {tid!r}; choose from {', '.join(MF_TABLES + ('V',) + CATALOG_TABLES)}")
    if cfg.format == "json":
        return json.dumps({"schema": SCHEMA, "table": tid, "rows": rows}, indent=1) + "\n"
    lines = []
    for r in rows:
        text = r.get("display") or f"{r.get('algebra')} on {r.get('space')}"
        cond = r.get("conditions") or r.get("constraints") or ""
        lines.append(f"{r['id']}\t{text}\t{cond}")
    return "\n".join(lines) + "\n"


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute a configuration; returns (exit code, report text)."""
    try:
        validate_data()
    except (OSError, ValueError, KeyError, CatalogError) as exc:
        return EXIT_USAGE, f"error: invalid data file: {exc}\n"
    try:
        if cfg.command == "check":
            return EXIT_OK, _run_check(cfg)
        if cfg.command == "polar":
            return EXIT_OK, _run_polar(cfg)
        if cfg.command == "preho":
            return EXIT_OK, _run_preho(cfg)
        if cfg.command == "mf":
            return EXIT_OK, _run_mf(cfg)
        if cfg.command == "tables":
            text, code = _run_tables(cfg)
            return code, text
        if cfg.command == "dump-table":
            return EXIT_OK, _run_dump(cfg)
        return EXIT_USAGE, f"error: unknown command {cfg.command!r}\n"
    except EngineDisagreement as exc:
        return EXIT_DISAGREEMENT, f"error: {exc}\n" + json.dumps(
            {"symbolic": exc.symbolic, "numeric": exc.numeric}, indent=1, sort_keys=True, default=str) + "\n"
    except DegenerateNumericsError as exc:
        return EXIT_DEGENERATE, f"error: degenerate numerics: {exc}\n" + json.dumps(
            exc.diagnostics, sort_keys=True, default=str) + "\n"
    except (LabelError, ValueError, KeyError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser, fmt=("text", "json")) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=8)
    p.add_argument("--tol", dest="tolerance", type=float, default=DEFAULT_TOL)
    p.add_argument("--format", choices=fmt, default=fmt[0])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coiso", description="Coisotropic and polar actions on complex Grassmannians.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, text in (("check", "coisotropy verdict with certificate"), ("polar", "polarity verdict")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--embedding", required=True, help="label such as so:5, spin7, block(su:3;su:3;z)")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        _common(p)
        if name == "check":
            p.add_argument("--no-polar", dest="polar", action="store_false")
    p = sub.add_parser("preho", help="prehomogeneity and castling of an irreducible triplet")
    p.add_argument("--triplet", required=True, help='e.g. "spin7:L3 * gl2:L1"')
    _common(p)
    p = sub.add_parser("mf", help="multiplicity freeness of a module")
    p.add_argument("--module", required=True, help='e.g. "su3:L1 + su3:L1*"')
    p.add_argument("--scalars", choices=("full", "none"), default="full")
    _common(p)
    p = sub.add_parser("tables", help="regenerate the classification tables")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--no-polar", dest="polar", action="store_false")
    p.add_argument("--output", help="write the report to this file instead of stdout")
    p.add_argument("--figures", help="directory for PNG figures")
    p.add_argument("--workers", type=int, default=1)
    _common(p, ("markdown", "json"))
    p = sub.add_parser("dump-table", help="print a data table")
    p.add_argument("table", help="Ia, Ib, IIa, IIb, V, 1, 2, 3, negative or monotone")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = vars(build_parser().parse_args(argv))
    cfg = RunConfig(**{k: v for k, v in args.items() if k in RunConfig.__dataclass_fields__})
    code, text = run(cfg)
    if cfg.output and code in (EXIT_OK, EXIT_DISAGREEMENT, EXIT_DEGENERATE) and cfg.command == "tables":
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        (sys.stderr if code == EXIT_USAGE else sys.stdout).write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
