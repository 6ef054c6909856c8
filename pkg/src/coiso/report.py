"""Reports for regenerated tables: markdown, JSON and matplotlib figures.

Markdown tables keep the three-column layout algebra | M | conditions, one
line per catalog row, followed by a verification list with the instance
counts behind each line.  JSON reports carry ``"schema": "v1"``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from .catalog import CatalogRow, rows_of
from .classify import TableReport
from .polar import PolarTableReport

__all__ = [
    "SCHEMA",
    "TITLES",
    "table_markdown",
    "polar_markdown",
    "tables_markdown",
    "tables_json",
    "render_figures",
]

SCHEMA = "v1"
TITLES = {
    "1": "Table 1: coisotropic actions of semisimple subalgebras",
    "2": "Table 2: minimal coisotropic actions with an abelian part",
    "negative": "Negative controls: actions that are not coisotropic",
    "3": "Table 3: polar actions",
}


def _cell(text: str) -> str:
    return text.replace("|", "\\|") if text else " "


def _layout(rows: Sequence[CatalogRow]) -> list[str]:
    out = ["| algebra | M | conditions |", "|---|---|---|"]
    out += [f"| {_cell(r.algebra)} | {_cell(r.space)} | {_cell(r.conditions)} |" for r in rows]
    return out


def table_markdown(report: TableReport, table: str) -> str:
    """One regenerated table with its verification summary."""
    rows = rows_of(table)
    by_row = report.by_row()
    lines = [f"## {TITLES[table]}", ""] + _layout(rows) + ["", "Verification (n <= %d):" % report.n_max, ""]
    for r in rows:
        items = by_row.get(r.id, [])
        if not items:
            lines.append(f"- {r.id}: no instance with n <= {report.n_max}")
            continue
        good = sum(i.ok for i in items)
        status = "ok" if good == len(items) else "FAILED"
        lines.append(f"- {r.id}: {good}/{len(items)} instances as expected [{status}]")
        for i in items:
            if not i.ok:
                why = i.error or ", ".join(k for k, v in i.checks.items() if not v.get("ok", True)) \
                    or f"coisotropic={i.coisotropic}"
                lines.append(f"  - {i.label} on Gr({i.k},{i.n}): {why}")
    return "\n".join(lines) + "\n"


def polar_markdown(report: PolarTableReport) -> str:
    """Table 3 as regenerated, with the polar instances outside it listed."""
    rows = rows_of("3")
    lines = [f"## {TITLES['3']}", ""] + _layout(rows) + ["", "Verification (n <= %d):" % report.n_max, ""]
    groups: dict[str, list] = {}
    for i in report.instances:
        groups.setdefault(i.row, []).append(i)
    for r in rows:
        items = groups.get(r.id, [])
        good = sum(i.ok for i in items)
        status = "ok" if items and good == len(items) else "FAILED"
        lines.append(f"- {r.id}: {good}/{len(items)} instances polar and hyperpolar [{status}]")
    others = [i for i in report.instances if not i.row.startswith("P-") and not i.ok]
    lines += ["", "Coisotropic instances outside Table 3 with an unexpected verdict:", ""]
    lines += [f"- {i.row}: {i.label} on Gr({i.k},{i.n}) polar={i.polar} ({i.reason})" for i in others] \
        or ["- none"]
    return "\n".join(lines) + "\n"


def tables_markdown(report: TableReport, polar: PolarTableReport | None = None) -> str:
    parts = [f"# Regenerated tables (n <= {report.n_max}, seed {report.seed}, {report.trials} trials)\n"]
    for t in ("1", "2", "negative"):
        if any(i.row in {r.id for r in rows_of(t)} for i in report.instances):
            parts.append(table_markdown(report, t))
    if polar is not None:
        parts.append(polar_markdown(polar))
    return "\n".join(parts)


def tables_json(report: TableReport, polar: PolarTableReport | None = None) -> str:
    data = {"schema": SCHEMA, "coisotropy": report.to_dict()}
    if polar is not None:
        data["polar"] = polar.to_dict()
    return json.dumps(data, indent=1, sort_keys=True) + "\n"


def render_figures(report: TableReport, outdir, polar: PolarTableReport | None = None) -> list[Path]:
    """Write PNG figures summarizing a regeneration run; returns their paths."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    # agreement per catalog row
    matrix = report.agreement_matrix()
    rows = sorted(matrix, key=_row_order)
    ok = [matrix[r]["as_expected"] for r in rows]
    bad = [matrix[r]["instances"] - matrix[r]["as_expected"] for r in rows]
    fig, ax = plt.subplots(figsize=(max(6, 0.3 * len(rows)), 4))
    ax.bar(rows, ok, color="tab:green", label="as expected")
    ax.bar(rows, bad, bottom=ok, color="tab:red", label="unexpected")
    ax.set_ylabel("instances")
    ax.set_title(f"Catalog rows, n <= {report.n_max}")
    ax.tick_params(axis="x", rotation=90, labelsize=7)
    ax.legend()
    fig.tight_layout()
    path = out / "agreement.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    # cohomogeneity against the rank difference
    pts = [(i.rank_difference, i.chm, i.coisotropic) for i in report.instances if i.chm is not None]
    fig, ax = plt.subplots(figsize=(5, 5))
    for flag, color, name in ((True, "tab:blue", "coisotropic"), (False, "tab:orange", "not coisotropic")):
        xs = [p[0] for p in pts if p[2] is flag]
        ys = [p[1] for p in pts if p[2] is flag]
        ax.scatter(xs, ys, s=14, color=color, label=name, alpha=0.7)
    top = max([max(p[0], p[1]) for p in pts], default=1)
    ax.plot([0, top], [0, top], color="gray", lw=0.8, ls="--")
    ax.set_xlabel("rank K - rank of principal isotropy")
    ax.set_ylabel("cohomogeneity")
    ax.legend()
    fig.tight_layout()
    path = out / "cohomogeneity.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    if polar is not None:
        reasons: dict[str, int] = {}
        for i in polar.instances:
            reasons[i.reason] = reasons.get(i.reason, 0) + 1
        names = sorted(reasons)
        fig, ax = plt.subplots(figsize=(6, 3.5))
        ax.barh(names, [reasons[r] for r in names], color="tab:purple")
        ax.set_xlabel("coisotropic instances")
        ax.set_title(f"Polarity verdicts by rule, n <= {polar.n_max}")
        fig.tight_layout()
        path = out / "polar_reasons.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written


def _row_order(row_id: str):
    prefix, _, num = row_id.partition("-")
    return (prefix, int(num) if num.isdigit() else 0)
