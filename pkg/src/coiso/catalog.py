"""Instance catalog for the classification tables.

Each row of ``data/catalog.json`` describes a family of actions on complex
Grassmannians through a label template.  Template fields ``{expr}`` are small
integer/rational expressions in the row parameters; rows with a scalar line
also use the slope ``s``, whose excluded value is the row's ``alpha``.

Row tables: ``"1"`` and ``"2"`` (coisotropic families), ``"3"`` (polar
families), ``"negative"`` (expected non-coisotropic) and ``"monotone"``
(pairs K inside L, with L given by ``contains``).
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .mftables import _data_path
from .oracle import ActionInstance
from .safeexpr import evaluate, names

__all__ = [
    "CatalogError",
    "CatalogRow",
    "CatalogInstance",
    "load_catalog",
    "dump_catalog",
    "catalog_rows",
    "rows_of",
    "render_label",
]

SCHEMA = 1
TABLES = ("1", "2", "3", "negative", "monotone")
_FIELD = re.compile(r"\{([^{}]+)\}")


class CatalogError(ValueError):
    """Malformed catalog data."""


def _fmt(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def render_label(template: str, env: dict) -> str:
    """Fill the ``{expr}`` fields of a label template."""
    return _FIELD.sub(lambda m: _fmt(evaluate(m.group(1), env)), template)


@dataclass(frozen=True)
class CatalogInstance:
    """One concrete member of a catalog row."""

    row_id: str
    label: str
    k: int
    n: int
    binding: tuple[tuple[str, Any], ...]
    slope: Fraction | None = None
    contains: str | None = None

    @property
    def action(self) -> ActionInstance:
        return ActionInstance(self.label, self.k, self.n)

    @property
    def key(self) -> str:
        return f"{self.row_id}:{self.label}@Gr({self.k},{self.n})"

    def env(self) -> dict:
        return dict(self.binding)


@dataclass(frozen=True)
class CatalogRow:
    id: str
    table: str
    algebra: str
    space: str
    conditions: str
    params: tuple[str, ...]
    derived: tuple[tuple[str, str], ...]
    constraints: tuple[str, ...]
    label: str
    alpha: str | None = None
    abelian: str | None = None
    polar: str | None = None
    polar_when: str | None = None
    contains: str | None = None
    display_params: tuple[tuple[str, str], ...] = ()
    flags: tuple[str, ...] = ()
    note: str = ""

    # -- serialization ------------------------------------------------------------

    @classmethod
    def from_dict(cls, d: dict) -> "CatalogRow":
        known = {"id", "table", "algebra", "space", "conditions", "params", "derived", "constraints",
                 "label", "alpha", "abelian", "polar", "polar_when", "contains", "display_params",
                 "flags", "note"}
        extra = set(d) - known
        if extra:
            raise CatalogError(f"row {d.get('id')!r}: unknown fields {sorted(extra)}")
        return cls(d["id"], str(d["table"]), d["algebra"], d["space"], d.get("conditions", ""),
                   tuple(d.get("params", ())), tuple(d.get("derived", {}).items()),
                   tuple(d.get("constraints", ())), d["label"], d.get("alpha"), d.get("abelian"),
                   d.get("polar"), d.get("polar_when"), d.get("contains"),
                   tuple(d.get("display_params", {}).items()), tuple(d.get("flags", ())), d.get("note", ""))

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"id": self.id, "table": self.table, "algebra": self.algebra,
                               "space": self.space, "conditions": self.conditions,
                               "params": list(self.params), "derived": dict(self.derived),
                               "constraints": list(self.constraints), "label": self.label}
        for f in ("alpha", "abelian", "polar", "polar_when", "contains"):
            if getattr(self, f) is not None:
                out[f] = getattr(self, f)
        if self.display_params:
            out["display_params"] = dict(self.display_params)
        if self.flags:
            out["flags"] = list(self.flags)
        if self.note:
            out["note"] = self.note
        return out

    def validate(self) -> None:
        if self.table not in TABLES:
            raise CatalogError(f"row {self.id}: unknown table {self.table!r}")
        bound = set(self.params) | {k for k, _ in self.derived}
        if not {"n", "k"} <= bound:
            raise CatalogError(f"row {self.id}: n and k must be parameters or derived")
        allowed = bound | ({"s"} if self.alpha else set())
        texts = [e for _, e in self.derived] + list(self.constraints)
        texts += _FIELD.findall(self.label) + _FIELD.findall(self.contains or "")
        texts += [self.alpha] if self.alpha else []
        texts += [self.polar_when] if self.polar_when else []
        for t in texts:
            unknown = names(t) - allowed
            if unknown:
                raise CatalogError(f"row {self.id}: unknown names {sorted(unknown)} in {t!r}")
        if "{s}" in self.label and not self.alpha:
            raise CatalogError(f"row {self.id}: slope field without alpha")
        if self.table == "monotone" and not self.contains:
            raise CatalogError(f"row {self.id}: monotone rows need 'contains'")

    # -- instances ------------------------------------------------------------------

    def excluded_slope(self, env: dict) -> Fraction | None:
        return Fraction(evaluate(self.alpha, env)) if self.alpha else None

    def bindings(self, n_max: int):
        """All parameter bindings with 2 <= k <= n/2, n <= n_max and the row constraints."""
        for values in itertools.product(range(1, n_max + 1), repeat=len(self.params)):
            env: dict[str, Any] = dict(zip(self.params, values))
            for key, expr in self.derived:
                env[key] = evaluate(expr, env)
            n, k = env["n"], env["k"]
            if n > n_max or not 2 <= k <= n / 2:
                continue
            if all(evaluate(c, env) for c in self.constraints):
                yield env

    def instance(self, env: dict, slope: Fraction | int | None = None) -> CatalogInstance:
        env = dict(env)
        s = None
        if self.alpha:
            s = Fraction(slope) if slope is not None else self.excluded_slope(env) + 1
            env["s"] = s
        label = render_label(self.label, env)
        contains = render_label(self.contains, env) if self.contains else None
        binding = tuple(sorted((key, v) for key, v in env.items() if key != "s"))
        return CatalogInstance(self.id, label, env["k"], env["n"], binding, s, contains)

    def instances(self, n_max: int) -> list[CatalogInstance]:
        return [self.instance(env) for env in self.bindings(n_max)]

    def expected_polar(self, env: dict) -> bool:
        if self.polar is None:
            return False
        return bool(evaluate(self.polar_when, env)) if self.polar_when else True

    def display_space(self) -> str:
        return self.space


def load_catalog(path=None) -> list[CatalogRow]:
    with open(path or _data_path("catalog.json"), encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("schema") != SCHEMA:
        raise CatalogError(f"unsupported catalog schema {data.get('schema')!r}")
    rows = [CatalogRow.from_dict(d) for d in data["rows"]]
    seen = set()
    for r in rows:
        r.validate()
        if r.id in seen:
            raise CatalogError(f"duplicate row id {r.id}")
        seen.add(r.id)
    return rows


def dump_catalog(data: dict, path) -> None:
    rows = [CatalogRow.from_dict(d) for d in data["rows"]]
    for r in rows:
        r.validate()
    out = {"schema": SCHEMA, "description": data.get("description", ""), "rows": [r.to_dict() for r in rows]}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(out, fh, indent=1, ensure_ascii=False)
        fh.write("\n")


@lru_cache(maxsize=None)
def catalog_rows() -> tuple[CatalogRow, ...]:
    return tuple(load_catalog())


def rows_of(table: str) -> list[CatalogRow]:
    return [r for r in catalog_rows() if r.table == table]
