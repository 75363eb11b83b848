"""Reduced pairs, the degree lower bound for G(f, g), and reduction searches.

Only the numeric shadow of reductions of types I-IV is modelled (the
divisibility and interval conditions they impose on the multidegree); the
elementary-reduction search is an exact linear solve over a bounded support.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Mapping, Optional, Tuple

from . import linalg
from .poly import (
    MINUS_INF,
    Degree,
    PolyMap,
    Polynomial,
    alg_independent,
    compose,
    poisson_degree,
    top,
    top_in_algebra_of,
)
from .semigroup import is_prime

_OPS = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "==": operator.eq,
    "!=": operator.ne,
}


@dataclass(frozen=True)
class Relation:
    """One recorded integer relation ``lhs op rhs``; ``holds`` re-evaluates it."""

    label: str
    lhs: int
    op: str
    rhs: int

    def __post_init__(self):
        if self.op not in _OPS:
            raise ValueError(f"unknown relation {self.op!r}")

    @property
    def holds(self) -> bool:
        return _OPS[self.op](self.lhs, self.rhs)

    def __str__(self):
        return f"{self.label}: {self.lhs} {self.op} {self.rhs} [{'ok' if self.holds else 'FAILS'}]"

    def to_json(self) -> dict:
        return {"label": self.label, "lhs": self.lhs, "op": self.op, "rhs": self.rhs,
                "holds": self.holds}

    @classmethod
    def from_json(cls, data: Mapping) -> "Relation":
        return cls(data["label"], data["lhs"], data["op"], data["rhs"])


# -- reduced pairs and the degree bound -------------------------------------


@dataclass(frozen=True)
class ReducedPairStats:
    deg_f: int
    deg_g: int
    p: int
    poisson_deg: int
    star_conditions: Tuple[bool, bool, bool]
    swapped: bool = False

    @property
    def star_reduced(self) -> bool:
        return all(self.star_conditions)

    @property
    def p_reduced(self) -> bool:
        return self.star_reduced and self.deg_f < self.deg_g


def pair_stats(f: Polynomial, g: Polynomial) -> ReducedPairStats:
    """Evaluate the three *-reduced conditions for (f, g), ordered so deg f <= deg g.

    (i) f, g algebraically independent; (ii) their highest homogeneous parts
    are dependent; (iii) neither top lies in the algebra generated by the other.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("pair_stats needs nonzero polynomials")
    swapped = f.degree() > g.degree()
    if swapped:
        f, g = g, f
    df, dg = f.degree(), g.degree()
    if df == 0:
        raise ValueError("pair_stats needs nonconstant polynomials")
    cond_i = alg_independent(f, g)
    cond_ii = not alg_independent(top(f), top(g))
    cond_iii = not top_in_algebra_of(f, g) and not top_in_algebra_of(g, f)
    return ReducedPairStats(
        deg_f=df,
        deg_g=dg,
        p=df // gcd(df, dg),
        poisson_deg=poisson_degree(f, g),
        star_conditions=(cond_i, cond_ii, cond_iii),
        swapped=swapped,
    )


def su_bound(deg_f: int, deg_g: int, poisson_deg: int, q: int, r: int) -> int:
    """Lower bound q*(p*deg g - deg g - deg f + deg[f,g]) + r*deg g on deg G(f, g).

    Here deg_y G = p*q + r with 0 <= r < p and p = deg f / gcd(deg f, deg g).
    """
    if not 1 <= deg_f <= deg_g:
        raise ValueError(f"need 1 <= deg f <= deg g, got ({deg_f}, {deg_g})")
    if q < 0:
        raise ValueError("q must be a natural number")
    p = deg_f // gcd(deg_f, deg_g)
    if not 0 <= r < p:
        raise ValueError(f"remainder r={r} must satisfy 0 <= r < p={p}")
    return q * (p * deg_g - deg_g - deg_f + poisson_deg) + r * deg_g


def y_degree(G: Polynomial) -> Degree:
    """Degree of G(x, y) in its second variable."""
    if G.nvars != 2:
        raise ValueError("expected a polynomial in two variables")
    return max((m[1] for m in G.terms), default=MINUS_INF)


# -- types I-IV numeric filter ------------------------------------------------


@dataclass(frozen=True)
class FilterReport:
    p1: int
    p2: int
    d3: int
    applicable: bool
    even_degrees: Tuple[int, ...]
    n: Optional[int]
    type_I_II_possible: bool
    type_III_IV_possible: bool
    relations: Tuple[Relation, ...]

    @property
    def conclusion(self) -> str:
        if not self.applicable:
            return "not_applicable"
        if not self.even_degrees:
            return "excluded"
        if self.type_I_II_possible or self.type_III_IV_possible:
            return "not_excluded"
        return "excluded"

    def to_json(self) -> dict:
        return {
            "p1": self.p1, "p2": self.p2, "d3": self.d3,
            "applicable": self.applicable,
            "even_degrees": list(self.even_degrees),
            "n": self.n,
            "type_I_II_possible": self.type_I_II_possible,
            "type_III_IV_possible": self.type_III_IV_possible,
            "relations": [r.to_json() for r in self.relations],
            "conclusion": self.conclusion,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "FilterReport":
        fresh = types_I_IV_filter(data["p1"], data["p2"], data["d3"])
        if fresh.to_json() != dict(data):
            raise ValueError("stored types I-IV report does not match a fresh evaluation")
        return fresh


def types_I_IV_filter(p1: int, p2: int, d3: int) -> FilterReport:
    """Evaluate the multidegree conditions a reduction of types I-IV would need.

    Such a reduction needs an even degree.  With d3 = 2n even, types I/II need
    p1 or p2 equal to s*n for an odd s >= 3; types III/IV need
    n < p1 <= 3n/2 with p2 = 3n, or p1 = 3n/2 with 5n/2 < p2 <= 3n.
    """
    applicable = (3 <= p1 < p2 <= d3 and p1 % 2 == 1 and p2 % 2 == 1
                  and is_prime(p1) and is_prime(p2))
    even = tuple(d for d in (p1, p2, d3) if d % 2 == 0)
    n = d3 // 2 if d3 % 2 == 0 else None
    rels: List[Relation] = []
    i_ii = iii_iv = False
    if n is not None:
        for name, p in (("p1", p1), ("p2", p2)):
            s, rem = divmod(p, n)
            if rem == 0 and s >= 3 and s % 2 == 1:
                i_ii = True
        alt1 = n < p1 and 2 * p1 <= 3 * n and p2 == 3 * n
        alt2 = 2 * p1 == 3 * n and 5 * n < 2 * p2 <= 6 * n
        iii_iv = alt1 or alt2
        rels = [
            Relation("types I/II: p1 < 3n <= s*n", p1, "<", 3 * n),
            Relation("types I/II: p2 < 3n <= s*n", p2, "<", 3 * n),
            Relation("types III/IV (first form): p2 != 3n", p2, "!=", 3 * n),
            Relation("types III/IV (second form): 2*p2 <= 5n", 2 * p2, "<=", 5 * n),
        ]
    return FilterReport(p1, p2, d3, applicable, even, n, i_ii, iii_iv, tuple(rels))


# -- elementary reductions --------------------------------------------------


@dataclass(frozen=True)
class ReductionWitness:
    """F_target - g(F_a, F_b) has degree ``new_degree`` < ``old_degree``.

    ``g`` is a polynomial in two variables (u, v) standing for the two other
    coordinates in increasing index order.
    """

    target: int          # 0-based
    g: Polynomial
    new_degree: Degree
    old_degree: int
    budget: int

    def __post_init__(self):
        if self.g.nvars != 2:
            raise ValueError("g must be a polynomial in two variables")
        if not self.new_degree < self.old_degree:
            raise ValueError(f"degree does not drop: {self.new_degree} >= {self.old_degree}")

    def others(self, n: int = 3) -> Tuple[int, int]:
        a, b = (k for k in range(n) if k != self.target)
        return a, b

    def verify(self, F: PolyMap) -> bool:
        """Re-expand g(F_a, F_b) and confirm the recorded degree drop."""
        a, b = self.others(F.n)
        residual = F[self.target] - compose(self.g, (F[a], F[b]))
        return (residual.degree() == self.new_degree
                and F[self.target].degree() == self.old_degree
                and self.new_degree < self.old_degree)

    def to_json(self) -> dict:
        nd = self.new_degree
        return {
            "target": self.target + 1,
            "g": self.g.to_json(),
            "new_degree": None if nd == MINUS_INF else nd,
            "old_degree": self.old_degree,
            "budget": self.budget,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ReductionWitness":
        nd = data["new_degree"]
        return cls(
            target=data["target"] - 1,
            g=Polynomial.from_json(data["g"]),
            new_degree=MINUS_INF if nd is None else nd,
            old_degree=data["old_degree"],
            budget=data["budget"],
        )


class _ProductCache:
    def __init__(self, fa: Polynomial, fb: Polynomial):
        self._pa = [Polynomial.const(fa.nvars, 1), fa]
        self._pb = [Polynomial.const(fb.nvars, 1), fb]
        self._prod: Dict[Tuple[int, int], Polynomial] = {}

    @staticmethod
    def _power(pows: list, k: int) -> Polynomial:
        while len(pows) <= k:
            pows.append(pows[-1] * pows[1])
        return pows[k]

    def __getitem__(self, ij: Tuple[int, int]) -> Polynomial:
        p = self._prod.get(ij)
        if p is None:
            i, j = ij
            if i == 0:
                p = self._power(self._pb, j)
            elif j == 0:
                p = self._power(self._pa, i)
            else:
                p = self._power(self._pa, i) * self._power(self._pb, j)
            self._prod[ij] = p
        return p


def _solve_threshold(ft: Polynomial, support: List[Tuple[int, int]], degs: Dict,
                     cache: _ProductCache, threshold: int) -> Optional[Dict[Tuple[int, int], object]]:
    # unknowns: products whose degree reaches the threshold; the rest stay zero
    cols = [ij for ij in support if degs[ij] >= threshold]
    rows: Dict[tuple, Dict[int, object]] = {}
    for k, ij in enumerate(cols):
        for m, c in cache[ij].terms.items():
            if sum(m) >= threshold:
                rows.setdefault(m, {})[k] = c
    for m in ft.terms:
        if sum(m) >= threshold:
            rows.setdefault(m, {})
    keys = sorted(rows)
    sol = linalg.solve([rows[m] for m in keys], [ft.coefficient(m) for m in keys], len(cols))
    if sol is None:
        return None
    return {ij: c for ij, c in zip(cols, sol) if c}


def elementary_search(F: PolyMap, target: int, budget: Optional[int] = None,
                      minimize: bool = False) -> Optional[ReductionWitness]:
    """Find g with deg(F_target - g(F_a, F_b)) < deg F_target, if one exists in the support.

    The support is every u^i v^j with i*deg F_a + j*deg F_b <= budget
    (default: deg F_target).  ``None`` means no such g exists within that
    support; nothing is claimed beyond it.  With ``minimize`` the degree
    threshold is lowered while the system stays solvable, yielding the least
    achievable residual degree.
    """
    if F.n != 3:
        raise ValueError("elementary_search works on maps of C^3")
    if not 0 <= target < 3:
        raise IndexError(f"target {target} out of range")
    a, b = (k for k in range(3) if k != target)
    ft, fa, fb = F[target], F[a], F[b]
    if fa.is_zero() or fb.is_zero() or ft.is_zero():
        raise ValueError("coordinates must be nonzero")
    da, db, dt = fa.degree(), fb.degree(), ft.degree()
    if da == 0 or db == 0:
        raise ValueError("the other two coordinates must be nonconstant")
    if budget is None:
        budget = dt
    if budget < dt:
        raise ValueError(f"budget {budget} is below deg F_target = {dt}")
    support = [(i, j) for i in range(budget // da + 1)
               for j in range((budget - i * da) // db + 1)]
    degs = {(i, j): i * da + j * db for i, j in support}
    cache = _ProductCache(fa, fb)

    best = None
    threshold = dt
    while True:
        coeffs = _solve_threshold(ft, support, degs, cache, threshold)
        if coeffs is None:
            break
        g = Polynomial(2, coeffs)
        residual = ft - compose(g, (fa, fb))
        best = ReductionWitness(target, g, residual.degree(), dt, budget)
        if not minimize or residual.is_zero():
            break
        threshold = residual.degree()
    return best
