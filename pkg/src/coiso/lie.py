"""Root systems, weights and dimension formulas for simple Lie algebras.

Weights are written in Dynkin (fundamental weight) coordinates with
Bourbaki's numbering of simple roots.  Spin representations of B_r are
``Lambda_r``, the half-spin representations of D_r are ``Lambda_{r-1}`` and
``Lambda_r``.  For G2 the 7-dimensional module is ``Lambda_1`` (the short
simple root is alpha_1); some older tables call it ``Lambda_2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = [
    "InvalidWeightError",
    "SimpleAlgebraId",
    "HighestWeight",
    "Irrep",
    "ReductiveAlgebra",
    "parse_algebra",
    "weyl_dim",
    "borel_dim",
    "dimensional_filter",
    "admissible_A_irreps",
]

SERIES = ("A", "B", "C", "D", "E", "F", "G")
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class InvalidWeightError(ValueError):
    pass


@lru_cache(maxsize=None)
def _gram(series: str, rank: int) -> tuple[tuple[Fraction, ...], ...]:
    """Inner products (alpha_i, alpha_j) of the simple roots."""
    g = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        g[i][i] = Fraction(2)
    if series == "E":
        # Bourbaki: 1-3-4-5-6-7-8 chain, 2 attached to 4
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, rank - 1)]
    elif series == "F":
        edges = [(0, 1), (1, 2), (2, 3)]
    elif series == "G":
        edges = [(0, 1)]
    elif series == "D":
        edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    else:
        edges = [(i, i + 1) for i in range(rank - 1)]
    for i, j in edges:
        g[i][j] = g[j][i] = Fraction(-1)
    if series == "B":
        g[rank - 1][rank - 1] = Fraction(1)
        g[rank - 2][rank - 1] = g[rank - 1][rank - 2] = Fraction(-1)
    elif series == "C":
        g[rank - 1][rank - 1] = Fraction(4)
        g[rank - 2][rank - 1] = g[rank - 1][rank - 2] = Fraction(-2)
    elif series == "F":
        g[2][2] = g[3][3] = Fraction(1)
        g[2][3] = g[3][2] = Fraction(-1, 2)
    elif series == "G":
        g[1][1] = Fraction(6)
        g[0][1] = g[1][0] = Fraction(-3)
    return tuple(tuple(r) for r in g)


@lru_cache(maxsize=None)
def _positive_roots(series: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Positive roots in simple-root coordinates, ordered by height."""
    g = _gram(series, rank)
    cartan = [[int(2 * g[i][j] / g[i][i]) for j in range(rank)] for i in range(rank)]
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    roots = list(simple)
    known = set(roots)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(rank):
                # p: how far beta - s*alpha_i stays a root
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in known:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[i][j] for j in range(rank))
                if p - pairing > 0:
                    new = list(beta)
                    new[i] += 1
                    new = tuple(new)
                    if new not in known:
                        known.add(new)
                        nxt.append(new)
        roots.extend(nxt)
        layer = nxt
    return tuple(roots)


@dataclass(frozen=True, order=True)
class SimpleAlgebraId:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise ValueError(f"unknown series {self.series!r}")
        if self.series in _EXCEPTIONAL_RANKS:
            if self.rank not in _EXCEPTIONAL_RANKS[self.series]:
                raise ValueError(f"{self.series}{self.rank} is not a simple algebra")
        elif self.rank < _MIN_RANK[self.series]:
            raise ValueError(f"rank {self.rank} too small for series {self.series}")

    @property
    def gram(self):
        return _gram(self.series, self.rank)

    @property
    def positive_roots(self):
        return _positive_roots(self.series, self.rank)

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @property
    def cartan_matrix(self) -> list[list[int]]:
        g = self.gram
        return [[int(2 * g[i][j] / g[i][i]) for j in range(self.rank)] for i in range(self.rank)]

    @property
    def compact_name(self) -> str:
        """Name of the compact real form, e.g. su(3), sp(2), spin(7), g2."""
        s, r = self.series, self.rank
        if s == "A":
            return f"su({r + 1})"
        if s == "B":
            return f"so({2 * r + 1})"
        if s == "C":
            return f"sp({r})"
        if s == "D":
            return f"so({2 * r})"
        return f"{s.lower()}{r}"

    def __str__(self):
        return f"{self.series}{self.rank}"


def parse_algebra(text: str) -> SimpleAlgebraId:
    """Parse ``A3``, ``E6``, ``su(4)``, ``sp(2)``, ``so(7)``, ``spin(7)``, ``g2``."""
    t = text.strip().lower().replace(" ", "")
    for prefix in ("spin(", "so(", "su(", "sp("):
        if t.startswith(prefix) and t.endswith(")"):
            m = int(t[len(prefix):-1])
            if prefix == "su(":
                return SimpleAlgebraId("A", m - 1)
            if prefix == "sp(":
                return SimpleAlgebraId("C", m)
            if m % 2:
                return SimpleAlgebraId("B", (m - 1) // 2)
            return SimpleAlgebraId("D", m // 2)
    if len(t) >= 2 and t[0].upper() in SERIES and t[1:].isdigit():
        return SimpleAlgebraId(t[0].upper(), int(t[1:]))
    raise ValueError(f"cannot parse algebra {text!r}")


@dataclass(frozen=True, order=True)
class HighestWeight:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if any(c < 0 for c in self.coeffs):
            raise InvalidWeightError(f"negative Dynkin label in {self.coeffs}")

    @classmethod
    def fundamental(cls, rank: int, i: int, mult: int = 1) -> "HighestWeight":
        """``mult * Lambda_i`` with 1-based index ``i``."""
        if not 1 <= i <= rank:
            raise InvalidWeightError(f"Lambda_{i} does not exist in rank {rank}")
        return cls(tuple(mult if j == i - 1 else 0 for j in range(rank)))

    @classmethod
    def zero(cls, rank: int) -> "HighestWeight":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs, 1):
            if c:
                parts.append(f"L{i}" if c == 1 else f"{c}L{i}")
        return "+".join(parts) or "0"


def _check(alg: SimpleAlgebraId, hw: HighestWeight):
    if hw.rank != alg.rank:
        raise InvalidWeightError(
            f"weight {hw.coeffs} has length {hw.rank}, algebra {alg} has rank {alg.rank}")


def weyl_dim(alg: SimpleAlgebraId, hw: HighestWeight) -> int:
    """Dimension of the irreducible module with highest weight ``hw``."""
    _check(alg, hw)
    half = [alg.gram[j][j] / 2 for j in range(alg.rank)]
    num = Fraction(1)
    den = Fraction(1)
    for root in alg.positive_roots:
        num *= sum(c * (a + 1) * h for c, a, h in zip(root, hw.coeffs, half))
        den *= sum(c * h for c, h in zip(root, half))
    d = num / den
    assert d.denominator == 1
    return int(d)


@dataclass(frozen=True)
class Irrep:
    algebra: SimpleAlgebraId
    hw: HighestWeight
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "degree", weyl_dim(self.algebra, self.hw))

    def dual(self) -> "Irrep":
        return Irrep(self.algebra, dual_weight(self.algebra, self.hw))

    def __str__(self):
        return f"{self.algebra}[{self.hw}]"


def dual_weight(alg: SimpleAlgebraId, hw: HighestWeight) -> HighestWeight:
    """Highest weight of the contragredient module (-w0 applied to hw)."""
    _check(alg, hw)
    c = list(hw.coeffs)
    s, r = alg.series, alg.rank
    if s == "A":
        c = c[::-1]
    elif s == "D" and r % 2 == 1:
        c[-2], c[-1] = c[-1], c[-2]
    elif s == "E" and r == 6:
        # Bourbaki labels: 1<->6, 3<->5, 2 and 4 fixed
        c = [c[5], c[1], c[4], c[3], c[2], c[0]]
    return HighestWeight(tuple(c))


@dataclass(frozen=True)
class ReductiveAlgebra:
    """Direct sum of simple ideals and an abelian summand of given dimension."""

    ideals: tuple[SimpleAlgebraId, ...] = ()
    abelian_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "ideals", tuple(self.ideals))
        if self.abelian_rank < 0:
            raise ValueError("abelian_rank must be non-negative")

    @property
    def dim(self) -> int:
        return sum(i.dim for i in self.ideals) + self.abelian_rank

    @property
    def rank(self) -> int:
        return sum(i.rank for i in self.ideals) + self.abelian_rank

    def is_semisimple(self) -> bool:
        return self.abelian_rank == 0

    def add(self, other: "ReductiveAlgebra") -> "ReductiveAlgebra":
        return ReductiveAlgebra(self.ideals + other.ideals, self.abelian_rank + other.abelian_rank)

    def __str__(self):
        parts = [i.compact_name for i in self.ideals]
        if self.abelian_rank:
            parts.append(f"u(1)^{self.abelian_rank}" if self.abelian_rank > 1 else "u(1)")
        return " + ".join(parts) or "0"


def borel_dim(alg: ReductiveAlgebra | SimpleAlgebraId) -> int:
    """Complex dimension of a Borel subalgebra of the complexification."""
    if isinstance(alg, SimpleAlgebraId):
        alg = ReductiveAlgebra((alg,))
    return sum((i.dim + i.rank) // 2 for i in alg.ideals) + alg.abelian_rank


def dimensional_filter(alg: ReductiveAlgebra | SimpleAlgebraId, k: int, n: int) -> bool:
    """Necessary condition for a coisotropic action on Gr(k, n)."""
    return borel_dim(alg) >= k * (n - k)


def _eq1_bound(n: int, k: int) -> Fraction:
    return Fraction((n - 1) * (n + 2), 2 * k) + k


def _eq2_bound(n: int) -> Fraction:
    return Fraction((n - 1) * (n + 2), 3)


def admissible_A_irreps(n: int, k: int, *, range_bound: bool = False) -> list[HighestWeight]:
    """Non-trivial highest weights of sl(n) passing the Borel-dimension bound.

    ``n`` is the size of SL(n) (so the algebra is A_{n-1}).  With
    ``range_bound=False`` the degree bound for fixed ``k`` is used,
    ``d <= (n-1)(n+2)/(2k) + k``; with ``range_bound=True`` the weaker bound
    ``d <= (n-1)(n+2)/3`` valid for the whole range ``2 < k <= d/2``.
    """
    if n < 2 or k < 2:
        raise ValueError("need n >= 2 and k >= 2")
    alg = SimpleAlgebraId("A", n - 1)
    bound = _eq2_bound(n) if range_bound else _eq1_bound(n, k)
    out = []
    # degree is strictly increasing in every Dynkin label, so a coefficient
    # is never raised past the first value where the bound fails
    def rec(prefix: list[int]):
        i = len(prefix)
        if i == alg.rank:
            hw = HighestWeight(tuple(prefix))
            if not hw.is_zero():
                d = weyl_dim(alg, hw)
                if d <= bound:
                    out.append(hw)
            return
        m = 0
        while True:
            trial = HighestWeight(tuple(prefix + [m] + [0] * (alg.rank - i - 1)))
            if m > 0 and weyl_dim(alg, trial) > bound:
                break
            rec(prefix + [m])
            m += 1

    rec([])
    return sorted(out)


def all_weights_bounded(alg: SimpleAlgebraId, max_coeff: int) -> Iterable[HighestWeight]:
    """Every dominant weight with all Dynkin labels at most ``max_coeff``."""
    for c in itertools.product(range(max_coeff + 1), repeat=alg.rank):
        yield HighestWeight(c)
