"""Evaluation of small integer constraint expressions stored in data files.

Only literals, parameter names, arithmetic, comparisons and boolean
connectives are accepted; anything else raises ``ValueError``.
"""

from __future__ import annotations

import ast
import operator
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

_BIN = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.FloorDiv: operator.floordiv, ast.Mod: operator.mod,
        ast.Div: lambda a, b: Fraction(a) / Fraction(b)}
_CMP = {ast.Eq: operator.eq, ast.NotEq: operator.ne, ast.Lt: operator.lt,
        ast.LtE: operator.le, ast.Gt: operator.gt, ast.GtE: operator.ge}


@lru_cache(maxsize=None)
def _parse(text: str) -> ast.Expression:
    tree = ast.parse(text, mode="eval")
    for node in ast.walk(tree):
        ok = isinstance(node, (ast.Expression, ast.BoolOp, ast.And, ast.Or, ast.UnaryOp, ast.Not,
                               ast.USub, ast.UAdd, ast.BinOp, ast.Compare, ast.Name, ast.Load,
                               ast.Constant)) or type(node) in _BIN or type(node) in _CMP
        if not ok:
            raise ValueError(f"unsupported syntax {type(node).__name__} in {text!r}")
        if isinstance(node, ast.Constant) and not isinstance(node.value, int):
            raise ValueError(f"only integer literals are allowed in {text!r}")
    return tree


def evaluate(text: str, env: Mapping[str, int | Fraction]):
    """Evaluate ``text`` with the variables in ``env``."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise ValueError(f"unknown name {node.id!r} in {text!r}")
            return env[node.id]
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            return {ast.USub: lambda x: -x, ast.UAdd: lambda x: x, ast.Not: lambda x: not x}[type(node.op)](v)
        if isinstance(node, ast.BinOp):
            return _BIN[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.BoolOp):
            vals = (ev(v) for v in node.values)
            return all(vals) if isinstance(node.op, ast.And) else any(vals)
        if isinstance(node, ast.Compare):
            left = ev(node.left)
            for op, comp in zip(node.ops, node.comparators):
                right = ev(comp)
                if not _CMP[type(op)](left, right):
                    return False
                left = right
            return True
        raise ValueError(f"unsupported node {node!r}")

    return ev(_parse(text))


def names(text: str) -> set[str]:
    return {n.id for n in ast.walk(_parse(text)) if isinstance(n, ast.Name)}
