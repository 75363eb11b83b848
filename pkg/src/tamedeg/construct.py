"""Witness construction and the (p1, p2, d3) classifier.

``realize`` builds an explicit tame automorphism with a prescribed
multidegree whenever some degree is a natural combination of the earlier
ones: every other coordinate is seeded with a pure power of the chosen
variable, and the chosen coordinate then receives the matching product of
the others.  All addend coefficients are +1, so leading terms never cancel
and the multidegree can be read off the recipe.

``decide`` classifies sorted triples: constructive membership first, then
the cited list of known non-members, then the two-prime non-membership
argument (with a re-checkable trace), and ``OutOfScope`` for everything else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence, Tuple, Union

from . import semigroup
from .poly import Polynomial
from .reduction import FilterReport, Relation, types_I_IV_filter
from .semigroup import Representation, is_prime
from .tame import Elementary, TameWord

KNOWN_CITATION = (
    "cited result (not re-derived here): no tame automorphism of C^3 has "
    "multidegree (3,4,5), (3,5,7), (4,5,7) or (4,5,11)"
)
KNOWN_NONMEMBERS = frozenset({(3, 4, 5), (3, 5, 7), (4, 5, 7), (4, 5, 11)})


def _check_sorted(degrees: Sequence[int]) -> None:
    if any(not isinstance(d, int) or d < 1 for d in degrees):
        raise ValueError(f"degrees must be positive integers, got {list(degrees)}")
    if any(a > b for a, b in zip(degrees, degrees[1:])):
        raise ValueError(f"degrees must be sorted ascending, got {list(degrees)}")


@dataclass(frozen=True)
class Realization:
    index: int                       # 0-based coordinate whose degree is a combination
    representation: Representation   # over the degrees before ``index``
    word: TameWord


def realize_with_representation(degrees: Sequence[int]) -> Optional[Realization]:
    degrees = tuple(degrees)
    _check_sorted(degrees)
    n = len(degrees)
    for i in range(n - 1, 0, -1):
        rep = semigroup.member(degrees[:i], degrees[i])
        if rep is None:
            continue
        factors = []
        for j in range(n):
            if j == i:
                continue
            exps = [0] * n
            exps[i] = degrees[j]
            factors.append(Elementary(j, Polynomial.monomial(exps)))
        exps = list(rep.coefficients) + [0] * (n - i)
        factors.append(Elementary(i, Polynomial.monomial(exps)))
        return Realization(i, rep, TameWord(n, tuple(factors)))
    return None


def realize(degrees: Sequence[int]) -> Optional[TameWord]:
    """A tame word whose expansion has multidegree ``degrees``, if the recipe applies."""
    r = realize_with_representation(degrees)
    return r.word if r is not None else None


# -- non-membership traces --------------------------------------------------

@dataclass(frozen=True)
class CoordinateCheck:
    coordinate: int                  # 1-based coordinate that would be reduced
    note: str
    relations: Tuple[Relation, ...]

    def to_json(self) -> dict:
        return {"coordinate": self.coordinate, "note": self.note,
                "relations": [r.to_json() for r in self.relations]}

    @classmethod
    def from_json(cls, data: Mapping) -> "CoordinateCheck":
        return cls(data["coordinate"], data["note"],
                   tuple(Relation.from_json(r) for r in data["relations"]))


class TraceError(ValueError):
    pass


@dataclass(frozen=True)
class NonMemberTrace:
    p1: int
    p2: int
    d3: int
    sylvester_bound: int
    sylvester: Relation
    types_filter: FilterReport
    elementary_checks: Tuple[CoordinateCheck, ...]

    def __post_init__(self):
        bad = [r.label for r in self.relations() if not r.holds]
        if bad:
            raise TraceError(f"trace relations fail: {bad}")
        if self.types_filter.conclusion != "excluded":
            raise TraceError("reductions of types I-IV are not excluded")

    def relations(self) -> List[Relation]:
        out = [self.sylvester]
        for check in self.elementary_checks:
            out.extend(check.relations)
        return out

    def recheck(self) -> bool:
        """Re-evaluate every stored relation and the types I-IV filter from scratch."""
        fresh = types_I_IV_filter(self.p1, self.p2, self.d3)
        return all(r.holds for r in self.relations()) and fresh.conclusion == "excluded"

    def to_json(self) -> dict:
        return {
            "p1": self.p1, "p2": self.p2, "d3": self.d3,
            "sylvester_bound": self.sylvester_bound,
            "sylvester": self.sylvester.to_json(),
            "types_I_IV": self.types_filter.to_json(),
            "elementary": [c.to_json() for c in self.elementary_checks],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "NonMemberTrace":
        return cls(
            data["p1"], data["p2"], data["d3"], data["sylvester_bound"],
            Relation.from_json(data["sylvester"]),
            FilterReport.from_json(data["types_I_IV"]),
            tuple(CoordinateCheck.from_json(c) for c in data["elementary"]),
        )


def _theorem_hypotheses(p1: int, p2: int, d3: int) -> bool:
    return 3 <= p1 < p2 <= d3 and is_prime(p1) and is_prime(p2)


def nonmember_trace(p1: int, p2: int, d3: int) -> NonMemberTrace:
    """Record the obstruction chain showing (p1, p2, d3) is not a tame multidegree."""
    if not (_theorem_hypotheses(p1, p2, d3) and p1 % 2 and p2 % 2):
        raise ValueError(f"({p1}, {p2}, {d3}) is not an odd-prime triple with p1 < p2 <= d3")
    if semigroup.member([p1, p2], d3) is not None:
        raise ValueError(f"{d3} lies in {p1}N + {p2}N")
    bound = (p1 - 1) * (p2 - 1)
    sylvester = Relation("d3 below the conductor (p1-1)(p2-1)", d3, "<", bound)
    filt = types_I_IV_filter(p1, p2, d3)

    # reducing F3 by g(F1, F2): a y-degree of p1 or more already overshoots d3
    rels3 = [Relation("q >= 1 forces deg g(F1,F2) >= p1*p2 - p1 - p2 + 2 > d3",
                      p1 * p2 - p1 - p2 + 2, ">", d3),
             Relation("p1*p2 - p1 - p2 + 2 exceeds (p1-1)(p2-1)",
                      p1 * p2 - p1 - p2 + 2, ">", bound)]
    for r in range(p1):
        if d3 < r * p2:
            rels3.append(Relation(f"d3 below {r}*p2, outside class {r}", d3, "<", r * p2))
        else:
            rels3.append(Relation(f"d3 - {r}*p2 not divisible by p1", (d3 - r * p2) % p1, "!=", 0))
    check3 = CoordinateCheck(3, "d3 avoids every residue class r*p2 + p1*N, r < p1", tuple(rels3))

    def side(lo: int, hi: int, target: int, label_lo: str, label_hi: str, coord: int) -> CoordinateCheck:
        # reducing a coordinate of degree ``target`` by g(F_lo, F_hi), deg F_lo = lo, deg F_hi = hi = d3
        rels = (
            Relation(f"{label_lo} does not divide d3", hi % lo, "!=", 0),
            Relation(f"{label_lo}*d3 - d3 - {label_lo} + 2 >= {label_lo}*d3 - 2*d3",
                     lo * hi - hi - lo + 2, ">=", lo * hi - 2 * hi),
            Relation(f"{label_lo}*d3 - 2*d3 >= d3", lo * hi - 2 * hi, ">=", hi),
            Relation(f"d3 > {label_hi}", hi, ">", target),
            Relation(f"{label_lo} does not divide {label_hi}", target % lo, "!=", 0),
        )
        return CoordinateCheck(coord, f"g(F{'1' if coord == 2 else '2'}, F3) must be a polynomial "
                                      f"in F{'1' if coord == 2 else '2'} alone", rels)

    check2 = side(p1, d3, p2, "p1", "p2", 2)
    check1 = side(p2, d3, p1, "p2", "p1", 1)
    check1 = CoordinateCheck(1, "symmetric to coordinate 2: " + check1.note, check1.relations)
    return NonMemberTrace(p1, p2, d3, bound, sylvester, filt, (check3, check2, check1))


# -- verdicts ---------------------------------------------------------------


@dataclass(frozen=True)
class Member:
    degrees: Tuple[int, int, int]
    index: int
    representation: Representation
    witness: TameWord
    kind: str = field(default="member", init=False)


@dataclass(frozen=True)
class NonMember:
    degrees: Tuple[int, int, int]
    trace: NonMemberTrace
    kind: str = field(default="nonmember", init=False)


@dataclass(frozen=True)
class KnownNonMember:
    degrees: Tuple[int, int, int]
    citation: str
    trace: Optional[NonMemberTrace] = None
    kind: str = field(default="known_nonmember", init=False)


@dataclass(frozen=True)
class OutOfScope:
    degrees: Tuple[int, int, int]
    reason: str
    kind: str = field(default="out_of_scope", init=False)


Verdict = Union[Member, NonMember, KnownNonMember, OutOfScope]


def decide(d1: int, d2: int, d3: int) -> Verdict:
    degrees = (d1, d2, d3)
    _check_sorted(degrees)
    real = realize_with_representation(degrees)
    if real is not None:
        return Member(degrees, real.index, real.representation, real.word)
    in_theorem = _theorem_hypotheses(d1, d2, d3)
    if degrees in KNOWN_NONMEMBERS:
        trace = nonmember_trace(d1, d2, d3) if in_theorem else None
        return KnownNonMember(degrees, KNOWN_CITATION, trace)
    if in_theorem:
        return NonMember(degrees, nonmember_trace(d1, d2, d3))
    return OutOfScope(
        degrees,
        "no degree is a natural combination of the smaller ones, the triple is not "
        "a cited non-member, and (d1, d2) are not primes with 3 <= d1 < d2",
    )


def verdict_to_json(v: Verdict) -> dict:
    out = {"verdict": v.kind, "degrees": list(v.degrees)}
    if isinstance(v, Member):
        out["index"] = v.index + 1
        out["representation"] = list(v.representation.coefficients)
        out["witness"] = v.witness.to_json()
    elif isinstance(v, NonMember):
        out["trace"] = v.trace.to_json()
    elif isinstance(v, KnownNonMember):
        out["citation"] = v.citation
        if v.trace is not None:
            out["trace"] = v.trace.to_json()
    else:
        out["reason"] = v.reason
    return out


def verdict_from_json(data: Mapping) -> Verdict:
    degrees = tuple(data["degrees"])
    kind = data["verdict"]
    if kind == "member":
        index = data["index"] - 1
        rep = Representation(degrees[:index], tuple(data["representation"]))
        return Member(degrees, index, rep, TameWord.from_json(data["witness"]))
    if kind == "nonmember":
        return NonMember(degrees, NonMemberTrace.from_json(data["trace"]))
    if kind == "known_nonmember":
        trace = NonMemberTrace.from_json(data["trace"]) if "trace" in data else None
        return KnownNonMember(degrees, data["citation"], trace)
    if kind == "out_of_scope":
        return OutOfScope(degrees, data["reason"])
    raise ValueError(f"unknown verdict {kind!r}")
