"""Exception tables: d3 >= p2 for which (p1, p2, d3) is not a tame multidegree.

Derived tables come from the semigroup sieve.  The published lists are kept
verbatim (including a repeated entry and an entry that is actually
representable) so that ``paper_diff`` documents disagreements instead of
hiding them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .semigroup import GeneratorPair, gaps_at_least, member, three_prime_exceptions

PUBLISHED: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (5, 7): (8, 9, 11, 13, 16, 18, 21, 23),
    (5, 11): (12, 13, 14, 17, 18, 19, 23, 24, 28, 29, 34, 39),
    (5, 13): (14, 16, 17, 19, 21, 22, 24, 27, 29, 32, 34, 37, 42, 47),
    (7, 11): (12, 13, 15, 16, 17, 19, 20, 23, 24, 26, 27, 30, 31, 34, 37, 38, 41, 45, 45,
              48, 52, 59),
}


def exception_table(a: int, b: int) -> List[int]:
    """All d3 >= b outside aN + bN, ascending."""
    pair = GeneratorPair(a, b)
    return gaps_at_least(pair, pair.b)


def _combination_text(generators: Tuple[int, ...], coefficients: Tuple[int, ...]) -> str:
    parts = [f"{k}·{g}" if k != 1 else str(g) for k, g in zip(coefficients, generators) if k]
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class TableDiff:
    pair: Tuple[int, int]
    derived: Tuple[int, ...]
    published: Tuple[int, ...]
    spurious: Tuple[Tuple[int, str], ...]   # published but representable
    missing: Tuple[int, ...]                # derived but not published
    repeated: Tuple[int, ...]               # published more than once

    @property
    def exact(self) -> bool:
        return not (self.spurious or self.missing or self.repeated)

    def lines(self) -> List[str]:
        if self.exact:
            return ["match: exact"]
        out = []
        for value, combo in self.spurious:
            out.append(f"discrepancy: paper lists {value}; {value} = {combo} is representable")
        for value in self.missing:
            out.append(f"discrepancy: paper omits {value}, which is not representable")
        for value in self.repeated:
            out.append(f"discrepancy: paper repeats {value}")
        return out

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair),
            "derived": list(self.derived),
            "published": list(self.published),
            "exact": self.exact,
            "discrepancies": self.lines() if not self.exact else [],
        }


def paper_diff(a: int, b: int) -> TableDiff:
    key = (min(a, b), max(a, b))
    if key not in PUBLISHED:
        raise KeyError(f"no published table for the pair {key}")
    published = PUBLISHED[key]
    derived = tuple(exception_table(*key))
    spurious = []
    for value in sorted(set(published) - set(derived)):
        rep = member(list(key), value)
        combo = _combination_text(rep.generators, rep.coefficients) if rep else "?"
        spurious.append((value, combo))
    missing = tuple(sorted(set(derived) - set(published)))
    repeated = tuple(sorted({v for v in published if published.count(v) > 1}))
    return TableDiff(key, derived, published, tuple(spurious), missing, repeated)


@dataclass(frozen=True)
class ThreeDiff:
    p2: int
    formula: Tuple[int, ...]
    sieve: Tuple[int, ...]

    @property
    def exact(self) -> bool:
        return self.formula == self.sieve

    def lines(self) -> List[str]:
        if self.exact:
            return ["match: exact"]
        out = []
        for v in sorted(set(self.formula) - set(self.sieve)):
            out.append(f"discrepancy: formula lists {v}, which is representable")
        for v in sorted(set(self.sieve) - set(self.formula)):
            out.append(f"discrepancy: formula omits {v}, which is not representable")
        return out

    def to_json(self) -> dict:
        return {"p2": self.p2, "formula": list(self.formula), "derived": list(self.sieve),
                "exact": self.exact, "discrepancies": self.lines() if not self.exact else []}


def three_diff(p2: int) -> ThreeDiff:
    return ThreeDiff(p2, tuple(three_prime_exceptions(p2)), tuple(exception_table(3, p2)))
