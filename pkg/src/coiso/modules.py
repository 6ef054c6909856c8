"""Formal module expressions over reductive algebras and exact characters.

A ``ModuleExpr`` is a direct sum of terms.  Each term carries, for every
simple ideal of the acting algebra, a (formal) tensor product of irreducible
modules, and a rational charge for every abelian generator.  In normal form
every ideal factor is a single irreducible.

Characters are exact integer Laurent polynomials whose exponents are
Dynkin labels (plus the rational charges), so half-integral spin weights
never show up as fractions.  ``to_epsilon`` converts to the usual orthogonal
coordinates for the classical series.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .lie import (
    HighestWeight,
    Irrep,
    ReductiveAlgebra,
    SimpleAlgebraId,
    dual_weight,
    weyl_dim,
)

__all__ = [
    "NotACharacterError",
    "RewriteNotice",
    "CharPoly",
    "Term",
    "ModuleExpr",
    "char_of",
    "char_of_term",
    "char_of_expr",
    "char_decompose",
    "rewrite",
    "weight_multiplicities",
    "to_epsilon",
    "from_epsilon",
    "irrep_symbol",
]

MAX_RANK = 8


class NotACharacterError(ValueError):
    pass


class RewriteNotice(UserWarning):
    pass


# -- weights -----------------------------------------------------------------

def _root_dynkin(alg: SimpleAlgebraId, root: Sequence[int]) -> tuple[int, ...]:
    cm = alg.cartan_matrix
    return tuple(sum(cm[i][j] * root[j] for j in range(alg.rank)) for i in range(alg.rank))


@lru_cache(maxsize=None)
def _inv_cartan(alg: SimpleAlgebraId) -> tuple[tuple[Fraction, ...], ...]:
    n = alg.rank
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(alg.cartan_matrix)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def _root_coords(alg: SimpleAlgebraId, mu: Sequence[int]) -> list[Fraction]:
    """Coordinates of a weight in the basis of simple roots."""
    inv = _inv_cartan(alg)
    return [sum(inv[j][i] * mu[i] for i in range(alg.rank)) for j in range(alg.rank)]


@lru_cache(maxsize=None)
def _fund_gram(alg: SimpleAlgebraId) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Integer matrix D*(w_i, w_j) with its common denominator D."""
    inv = _inv_cartan(alg)
    g = alg.gram
    m = [[inv[j][i] * g[j][j] / 2 for j in range(alg.rank)] for i in range(alg.rank)]
    from math import lcm
    d = 1
    for row in m:
        for x in row:
            d = lcm(d, x.denominator)
    return d, tuple(tuple(int(x * d) for x in row) for row in m)


def _inner_scaled(alg: SimpleAlgebraId, mu: Sequence[int], nu: Sequence[int]) -> int:
    _, m = _fund_gram(alg)
    return sum(mu[i] * sum(m[i][j] * nu[j] for j in range(len(nu))) for i in range(len(mu)) if mu[i])


def _inner(alg: SimpleAlgebraId, mu: Sequence, nu: Sequence) -> Fraction:
    d, _ = _fund_gram(alg)
    return Fraction(_inner_scaled(alg, mu, nu), d)


def height(alg: SimpleAlgebraId, mu: Sequence[int]) -> Fraction:
    return sum(_root_coords(alg, mu))


@lru_cache(maxsize=None)
def weight_multiplicities(alg: SimpleAlgebraId, hw: HighestWeight) -> dict[tuple[int, ...], int]:
    """All weights of V(hw) with multiplicities (Freudenthal's formula)."""
    if alg.rank > MAX_RANK:
        raise OverflowError(f"rank {alg.rank} exceeds the supported maximum {MAX_RANK}")
    if hw.rank != alg.rank:
        from .lie import InvalidWeightError
        raise InvalidWeightError(f"weight {hw.coeffs} does not fit {alg}")
    lam = hw.coeffs
    rho = (1,) * alg.rank
    lr = tuple(a + 1 for a in lam)
    norm_lr = _inner_scaled(alg, lr, lr)
    pos = [(_root_dynkin(alg, r), sum(r)) for r in alg.positive_roots]
    simple = [_root_dynkin(alg, tuple(int(i == j) for j in range(alg.rank))) for i in range(alg.rank)]
    mult: dict[tuple[int, ...], int] = {lam: 1}
    layer = [lam]
    depth = 0
    while layer:
        depth += 1
        cand = set()
        for mu in layer:
            for s in simple:
                cand.add(tuple(m - x for m, x in zip(mu, s)))
        nxt = []
        for mu in sorted(cand):
            if mu in mult:
                continue
            mr = tuple(m + r for m, r in zip(mu, rho))
            den = norm_lr - _inner_scaled(alg, mr, mr)
            if den == 0:
                continue
            num = 0
            for a, ht in pos:
                # mu + j*a must lie above mu by at most the current depth
                for j in range(1, depth // ht + 1):
                    nu = tuple(m + j * x for m, x in zip(mu, a))
                    if nu in mult:
                        num += mult[nu] * _inner_scaled(alg, nu, a)
            m, r = divmod(2 * num, den)
            assert r == 0, (alg, hw, mu)
            if m:
                assert m > 0, (alg, hw, mu, m)
                mult[mu] = m
                nxt.append(mu)
        layer = nxt
    assert sum(mult.values()) == weyl_dim(alg, hw)
    return mult


def to_epsilon(alg: SimpleAlgebraId, mu: Sequence[int]) -> tuple[Fraction, ...]:
    """Orthogonal coordinates of a weight given in Dynkin labels.

    A_r weights are returned as traceless vectors of length r+1.
    """
    s, r = alg.series, alg.rank
    a = [Fraction(x) for x in mu]
    if s == "A":
        # eps_i - eps_{i+1} = a_i ; sum eps = 0
        e = [Fraction(0)] * (r + 1)
        for i in range(r - 1, -1, -1):
            e[i] = e[i + 1] + a[i]
        shift = sum(e) / (r + 1)
        return tuple(x - shift for x in e)
    if s in "BCD":
        e = [Fraction(0)] * r
        if s == "B":
            e[r - 1] = a[r - 1] / 2
        elif s == "C":
            e[r - 1] = a[r - 1]
        else:
            e[r - 1] = (a[r - 1] - a[r - 2]) / 2
            e[r - 2] = (a[r - 1] + a[r - 2]) / 2
        start = r - 2 if s != "D" else r - 3
        for i in range(start, -1, -1):
            e[i] = e[i + 1] + a[i]
        return tuple(e)
    raise ValueError(f"no orthogonal coordinates for {alg}")


def from_epsilon(alg: SimpleAlgebraId, eps: Sequence) -> tuple[int, ...]:
    """Dynkin labels of a weight given in orthogonal coordinates."""
    s, r = alg.series, alg.rank
    e = [Fraction(x) for x in eps]
    if s == "A":
        out = [e[i] - e[i + 1] for i in range(r)]
    elif s == "B":
        out = [e[i] - e[i + 1] for i in range(r - 1)] + [2 * e[r - 1]]
    elif s == "C":
        out = [e[i] - e[i + 1] for i in range(r - 1)] + [e[r - 1]]
    elif s == "D":
        out = [e[i] - e[i + 1] for i in range(r - 1)] + [e[r - 2] + e[r - 1]]
    else:
        raise ValueError(f"no orthogonal coordinates for {alg}")
    if any(x.denominator != 1 for x in out):
        raise ValueError(f"{tuple(eps)} is not an integral weight of {alg}")
    return tuple(int(x) for x in out)


# -- characters ----------------------------------------------------------------

Key = tuple  # (tuple of per-ideal Dynkin tuples, tuple of charges)


class CharPoly:
    """Exact character: Laurent monomials (per-ideal weights, charges) -> multiplicity."""

    def __init__(self, terms: Mapping[Key, int] | None = None):
        self.terms: dict[Key, int] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls, n_ideals: int, n_charges: int) -> "CharPoly":
        return cls({(tuple(() for _ in range(n_ideals)), (Fraction(0),) * n_charges): 1})

    def __add__(self, other):
        c = Counter(self.terms)
        for k, v in other.terms.items():
            c[k] += v
        return CharPoly(c)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, m: int) -> "CharPoly":
        return CharPoly({k: m * v for k, v in self.terms.items()})

    def __mul__(self, other):
        out: Counter = Counter()
        for (w1, c1), m1 in self.terms.items():
            for (w2, c2), m2 in other.terms.items():
                w = tuple(_add(a, b) for a, b in zip(w1, w2))
                c = tuple(x + y for x, y in zip(c1, c2))
                out[(w, c)] += m1 * m2
        return CharPoly(out)

    def __eq__(self, other):
        return isinstance(other, CharPoly) and self.terms == other.terms

    def __repr__(self):
        return f"CharPoly({len(self.terms)} monomials, dim={self.at_one()})"

    def at_one(self) -> int:
        return sum(self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def conjugate(self) -> "CharPoly":
        return CharPoly({(tuple(tuple(-x for x in w) for w in ws), tuple(-c for c in cs)): m
                         for (ws, cs), m in self.terms.items()})

    def adams2(self) -> "CharPoly":
        return CharPoly({(tuple(tuple(2 * x for x in w) for w in ws), tuple(2 * c for c in cs)): m
                         for (ws, cs), m in self.terms.items()})


def _add(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(x + y for x, y in zip(a, b))


def char_of(irrep: Irrep | tuple[SimpleAlgebraId, HighestWeight]) -> CharPoly:
    """Character of a single irreducible module of a simple algebra."""
    if isinstance(irrep, Irrep):
        alg, hw = irrep.algebra, irrep.hw
    else:
        alg, hw = irrep
    return CharPoly({((w,), ()): m for w, m in weight_multiplicities(alg, hw).items()})


# -- module expressions ----------------------------------------------------------

def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class Term:
    """One summand: per-ideal formal tensor products of irreps, plus charges."""

    factors: tuple[tuple[HighestWeight, ...], ...]
    charges: tuple[Fraction, ...] = ()

    def __post_init__(self):
        fs = []
        for f in self.factors:
            if isinstance(f, HighestWeight):
                f = (f,)
            fs.append(tuple(w for w in f if not w.is_zero()))
        object.__setattr__(self, "factors", tuple(fs))
        object.__setattr__(self, "charges", tuple(_frac(c) for c in self.charges))

    def is_normal(self) -> bool:
        return all(len(f) <= 1 for f in self.factors)

    def irrep(self, i: int) -> HighestWeight | None:
        f = self.factors[i]
        return f[0] if f else None


class ModuleExpr:
    """Direct sum of terms over a fixed reductive algebra, merged with multiplicity."""

    def __init__(self, algebra: ReductiveAlgebra, terms: Iterable[Term] | Mapping[Term, int] = ()):
        self.algebra = algebra
        c: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else ((t, 1) for t in terms)
        for t, m in items:
            if len(t.factors) != len(algebra.ideals):
                raise ValueError("factor count must equal the number of ideals")
            if len(t.charges) != algebra.abelian_rank:
                raise ValueError("charge count must equal the abelian rank")
            for alg, f in zip(algebra.ideals, t.factors):
                for w in f:
                    if w.rank != alg.rank:
                        from .lie import InvalidWeightError
                        raise InvalidWeightError(f"{w} does not fit {alg}")
            c[t] += m
        self.terms: dict[Term, int] = {t: m for t, m in sorted(c.items()) if m}

    def __eq__(self, other):
        return (isinstance(other, ModuleExpr) and self.algebra == other.algebra
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.algebra, tuple(self.terms.items())))

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return sum(self.terms.values())

    def summands(self) -> list[Term]:
        """Terms with multiplicity expanded."""
        return [t for t, m in self.terms.items() for _ in range(m)]

    def is_normal(self) -> bool:
        return all(t.is_normal() for t in self.terms)

    @property
    def dim(self) -> int:
        total = 0
        for t, m in self.terms.items():
            d = 1
            for alg, f in zip(self.algebra.ideals, t.factors):
                for w in f:
                    d *= weyl_dim(alg, w)
            total += m * d
        return total

    def direct_sum(self, other: "ModuleExpr") -> "ModuleExpr":
        if other.algebra != self.algebra:
            raise ValueError("algebras differ")
        c = Counter(self.terms)
        c.update(other.terms)
        return ModuleExpr(self.algebra, c)

    def dual(self) -> "ModuleExpr":
        return ModuleExpr(self.algebra, {
            Term(tuple(tuple(dual_weight(a, w) for w in f) for a, f in zip(self.algebra.ideals, t.factors)),
                 tuple(-c for c in t.charges)): m
            for t, m in self.terms.items()})

    def __repr__(self):
        return f"ModuleExpr({self.pretty()})"

    def pretty(self, names: Sequence[str] | None = None) -> str:
        return pretty(self, names)


def char_of_term(algebra: ReductiveAlgebra, term: Term) -> CharPoly:
    n = len(algebra.ideals)
    out = CharPoly({(tuple(() for _ in range(n)), term.charges): 1})
    for i, (alg, f) in enumerate(zip(algebra.ideals, term.factors)):
        for w in f:
            ch = CharPoly({(tuple(v if j == i else () for j in range(n)),
                            (Fraction(0),) * algebra.abelian_rank): m
                           for v, m in weight_multiplicities(alg, w).items()})
            out = out * ch
    return _fill(out, algebra)


def _fill(p: CharPoly, algebra: ReductiveAlgebra) -> CharPoly:
    """Replace empty per-ideal weights by explicit zero tuples."""
    out: Counter = Counter()
    for (ws, cs), m in p.terms.items():
        ws = tuple(w if w else (0,) * a.rank for w, a in zip(ws, algebra.ideals))
        out[(ws, cs)] += m
    return CharPoly(out)


def char_of_expr(expr: ModuleExpr) -> CharPoly:
    total = CharPoly()
    for t, m in expr.terms.items():
        total = total + char_of_term(expr.algebra, t).scale(m)
    return total


def char_decompose(p: CharPoly, algebra: ReductiveAlgebra) -> ModuleExpr:
    """Decompose a character into irreducibles by subtracting top weights."""
    p = _fill(p, algebra)
    found: Counter = Counter()
    rest = CharPoly(p.terms)
    guard = 0
    while not rest.is_zero():
        guard += 1
        if guard > 10_000:
            raise NotACharacterError("decomposition did not terminate")
        neg = [k for k, v in rest.terms.items() if v < 0]
        if neg:
            raise NotACharacterError(f"negative multiplicity at {neg[0]}")
        # the weight of largest total height is a highest weight
        def key(item):
            (ws, cs), _ = item
            return (sum(height(a, w) for a, w in zip(algebra.ideals, ws)), ws, cs)
        (ws, cs), m = max(rest.terms.items(), key=key)
        if any(x < 0 for w in ws for x in w):
            raise NotACharacterError(f"top weight {ws} is not dominant")
        term = Term(tuple(HighestWeight(w) for w in ws), cs)
        found[term] += m
        rest = rest - char_of_term(algebra, term).scale(m)
    return ModuleExpr(algebra, found)


# -- rewriting -------------------------------------------------------------------

RULES = ("dual", "tensor-contract", "sym-alt-split", "trivial-strip")


def _single_ideal_char(alg: SimpleAlgebraId, f: Sequence[HighestWeight]) -> CharPoly:
    out = CharPoly({(((0,) * alg.rank,), ()): 1})
    for w in f:
        out = out * CharPoly({((v,), ()): m for v, m in weight_multiplicities(alg, w).items()})
    return out


def _split_factor(alg: SimpleAlgebraId, ch: CharPoly) -> list[tuple[HighestWeight, int]]:
    dec = char_decompose(ch, ReductiveAlgebra((alg,)))
    return [(t.factors[0][0] if t.factors[0] else HighestWeight.zero(alg.rank), m)
            for t, m in dec.terms.items()]


def rewrite(expr: ModuleExpr, rule: str) -> ModuleExpr:
    """Apply one decomposition rule to every term where it applies."""
    if rule not in RULES:
        raise ValueError(f"unknown rule {rule!r}; expected one of {RULES}")
    if rule == "dual":
        return expr.dual()
    ideals = expr.algebra.ideals
    changed = False
    out: Counter = Counter()
    for t, m in expr.terms.items():
        pieces = [(t, 1)]
        if rule == "trivial-strip":
            # zero weights are already dropped on construction
            out[t] += m
            continue
        for i, (alg, f) in enumerate(zip(ideals, t.factors)):
            if len(f) < 2:
                continue
            if rule == "sym-alt-split":
                if len(f) != 2 or f[0] != f[1]:
                    continue
                sq = _single_ideal_char(alg, f)
                ad = _single_ideal_char(alg, f[:1]).adams2()
                sym = CharPoly({k: v // 2 for k, v in (sq + ad).terms.items()})
                alt = CharPoly({k: v // 2 for k, v in (sq - ad).terms.items()})
                parts = _split_factor(alg, sym) + (_split_factor(alg, alt) if not alt.is_zero() else [])
            else:
                parts = _split_factor(alg, _single_ideal_char(alg, f))
            changed = True
            new = []
            for pt, pm in pieces:
                for w, wm in parts:
                    fs = list(pt.factors)
                    fs[i] = (w,)
                    new.append((Term(tuple(fs), pt.charges), pm * wm))
            pieces = new
        for pt, pm in pieces:
            out[pt] += m * pm
    if rule == "trivial-strip":
        return ModuleExpr(expr.algebra, out)
    if not changed:
        warnings.warn(f"rule {rule} does not apply; expression unchanged", RewriteNotice, stacklevel=2)
        return expr
    return ModuleExpr(expr.algebra, out)


# -- printing --------------------------------------------------------------------

def irrep_symbol(alg: SimpleAlgebraId, hw: HighestWeight, space: str | None = None) -> str:
    """Name of an irreducible in the usual notation (C^n, (C^n)*, S^2, sl, ...)."""
    s, r, c = alg.series, alg.rank, hw.coeffs
    if hw.is_zero():
        return "C"
    if s == "A":
        v = space or f"C^{r + 1}"
        if c == HighestWeight.fundamental(r, 1).coeffs:
            return v
        if c == HighestWeight.fundamental(r, r).coeffs:
            return f"{v}*"
        if c == HighestWeight.fundamental(r, 1, 2).coeffs:
            return f"S2({v})"
        if c == HighestWeight.fundamental(r, r, 2).coeffs:
            return f"S2({v}*)"
        if r >= 3 and c == HighestWeight.fundamental(r, 2).coeffs:
            return f"L2({v})"
        if r >= 3 and c == HighestWeight.fundamental(r, r - 1).coeffs:
            return f"L2({v}*)"
        if r >= 2 and c == tuple([1] + [0] * (r - 2) + [1]):
            return f"sl({v})"
    if s in "BCD" and c == HighestWeight.fundamental(r, 1).coeffs:
        return space or (f"C^{2 * r}" if s in "CD" else f"C^{2 * r + 1}")
    if s == "B" and c == HighestWeight.fundamental(r, r).coeffs:
        return "spin"
    if s == "D" and c in (HighestWeight.fundamental(r, r).coeffs, HighestWeight.fundamental(r, r - 1).coeffs):
        return "half-spin"
    return f"V({weyl_dim(alg, hw)})"


def pretty(expr: ModuleExpr, names: Sequence[str] | None = None) -> str:
    parts = []
    for t, m in expr.terms.items():
        fac = []
        for i, (alg, f) in enumerate(zip(expr.algebra.ideals, t.factors)):
            for w in f:
                nm = names[i] if names else None
                fac.append(irrep_symbol(alg, w, nm))
        body = " (x) ".join(fac) or "C"
        if t.charges and any(t.charges):
            body += "[" + ",".join(str(c) for c in t.charges) + "]"
        parts.append(body if m == 1 else f"{m}*{body}")
    return " + ".join(parts) or "0"
