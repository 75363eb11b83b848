"""Tame automorphisms as words of linear and elementary factors.

A word ``[f1, ..., fk]`` is read as a construction script: ``f1`` is applied
first, so ``expand([f1, ..., fk]) = fk ∘ ... ∘ f1``.  Expansion is computed by
pushing the running map through one factor at a time, which only ever
substitutes into the (small) factor itself.

Factor indices are 0-based in Python and 1-based in JSON.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Mapping, Tuple, Union

from . import linalg
from .poly import (
    Polynomial,
    PolyMap,
    compose,
    format_rational,
    jacobian_det,
    mdeg,
    parse_rational,
)


@dataclass(frozen=True)
class Linear:
    """x -> M x + shift with M invertible."""

    matrix: Tuple[Tuple[Fraction, ...], ...]
    shift: Tuple[Fraction, ...]

    def __post_init__(self):
        matrix = tuple(tuple(Fraction(v) for v in row) for row in self.matrix)
        n = len(matrix)
        shift = tuple(Fraction(v) for v in self.shift) if self.shift else (Fraction(0),) * n
        if any(len(row) != n for row in matrix) or len(shift) != n:
            raise ValueError("linear factor needs an n x n matrix and n shifts")
        if linalg.det(matrix) == 0:
            raise ValueError("linear factor matrix is singular")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "shift", shift)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def apply(self, F: PolyMap) -> PolyMap:
        coords = []
        for row, s in zip(self.matrix, self.shift):
            acc = Polynomial.const(F.n, s)
            for a, c in zip(row, F.coords):
                if a:
                    acc = acc + c * a
            coords.append(acc)
        return PolyMap(coords)

    def inverse(self) -> "Linear":
        inv = linalg.inverse(self.matrix)
        shift = tuple(-sum(a * s for a, s in zip(row, self.shift)) for row in inv)
        return Linear(tuple(map(tuple, inv)), shift)

    def determinant(self) -> Fraction:
        return linalg.det(self.matrix)

    def to_json(self) -> dict:
        return {
            "type": "linear",
            "matrix": [[format_rational(v) for v in row] for row in self.matrix],
            "shift": [format_rational(v) for v in self.shift],
        }


@dataclass(frozen=True)
class Elementary:
    """x_index -> x_index + addend, where addend does not involve x_index."""

    index: int
    addend: Polynomial

    def __post_init__(self):
        if not 0 <= self.index < self.addend.nvars:
            raise ValueError(f"index {self.index} out of range for {self.addend.nvars} variables")
        if self.index in self.addend.variables():
            raise ValueError(f"addend {self.addend} involves x{self.index + 1}")

    @property
    def n(self) -> int:
        return self.addend.nvars

    def apply(self, F: PolyMap) -> PolyMap:
        coords = list(F.coords)
        coords[self.index] = coords[self.index] + compose(self.addend, F.coords)
        return PolyMap(coords)

    def inverse(self) -> "Elementary":
        return Elementary(self.index, -self.addend)

    def to_json(self) -> dict:
        return {"type": "elementary", "index": self.index + 1, "addend": self.addend.to_json()}


Factor = Union[Linear, Elementary]


def factor_from_json(data: Mapping) -> Factor:
    kind = data.get("type")
    if kind == "elementary":
        index = data["index"]
        if not isinstance(index, int) or index < 1:
            raise ValueError(f"elementary index must be a positive integer, got {index!r}")
        return Elementary(index - 1, Polynomial.from_json(data["addend"]))
    if kind == "linear":
        matrix = [[parse_rational(v) for v in row] for row in data["matrix"]]
        shift = [parse_rational(v) for v in data.get("shift", [0] * len(matrix))]
        return Linear(matrix, shift)
    raise ValueError(f"unknown factor type {kind!r}")


@dataclass(frozen=True)
class TameWord:
    n: int
    factors: Tuple[Factor, ...] = field(default=())

    def __post_init__(self):
        factors = tuple(self.factors)
        for f in factors:
            if f.n != self.n:
                raise ValueError(f"factor of arity {f.n} in a word of arity {self.n}")
        object.__setattr__(self, "factors", factors)

    def __len__(self):
        return len(self.factors)

    def __add__(self, other: "TameWord") -> "TameWord":
        if other.n != self.n:
            raise ValueError("cannot concatenate words of different arity")
        return TameWord(self.n, self.factors + other.factors)

    def expand(self) -> PolyMap:
        return expand(self)

    def invert(self) -> "TameWord":
        return invert(self)

    def to_json(self) -> dict:
        return {"n": self.n, "factors": [f.to_json() for f in self.factors]}

    @classmethod
    def from_json(cls, data: Mapping) -> "TameWord":
        n = data["n"]
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"n must be a positive integer, got {n!r}")
        return cls(n, tuple(factor_from_json(f) for f in data["factors"]))


def expand(w: TameWord) -> PolyMap:
    F = PolyMap.identity(w.n)
    for f in w.factors:
        F = f.apply(F)
    return F


def invert(w: TameWord) -> TameWord:
    return TameWord(w.n, tuple(f.inverse() for f in reversed(w.factors)))


@dataclass(frozen=True)
class VerificationReport:
    map: PolyMap
    mdeg: Tuple[int, ...]
    inverse_left: bool   # expand(invert(w)) ∘ expand(w) == id
    inverse_right: bool  # expand(w) ∘ expand(invert(w)) == id
    jacobian: Polynomial

    @property
    def jacobian_constant(self) -> bool:
        return self.jacobian.is_constant() and not self.jacobian.is_zero()

    @property
    def passed(self) -> bool:
        return self.inverse_left and self.inverse_right and self.jacobian_constant

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "mdeg": list(self.mdeg),
            "inverse_left": self.inverse_left,
            "inverse_right": self.inverse_right,
            "jacobian_det": self.jacobian.to_json(),
            "jacobian_constant": self.jacobian_constant,
            "map": self.map.to_json(),
        }


def verify(w: TameWord) -> VerificationReport:
    """Expand ``w`` and check its inverse word and Jacobian exactly.

    Composition with the inverse is evaluated by running the concatenated
    word, i.e. pushing the expanded map through the inverse factors.
    """
    F = expand(w)
    inv = invert(w)
    left = F
    for f in inv.factors:
        left = f.apply(left)
    right = expand(inv)
    for f in w.factors:
        right = f.apply(right)
    try:
        degrees = mdeg(F)
    except ValueError:
        degrees = tuple(c.degree() for c in F.coords)
    return VerificationReport(
        map=F,
        mdeg=degrees,
        inverse_left=left.is_identity(),
        inverse_right=right.is_identity(),
        jacobian=jacobian_det(F),
    )


# -- random words ----------------------------------------------------------

_COEFFS = (-3, -2, -1, 1, 2, 3)


def _random_linear(rng: random.Random, n: int) -> Linear:
    # permutation with nonzero diagonal scales plus one shear: invertible, sparse
    perm = list(range(n))
    rng.shuffle(perm)
    matrix = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        matrix[i][j] = rng.choice(_COEFFS)
    if n > 1:
        i = rng.randrange(n)
        j = rng.choice([k for k in range(n) if k != perm[i]])
        matrix[i][j] = rng.choice(_COEFFS)
        if linalg.det(matrix) == 0:
            matrix[i][j] = 0
    shift = [rng.choice((-1, 0, 0, 1)) for _ in range(n)]
    return Linear(matrix, shift)


def _random_exponents(rng: random.Random, n: int, skip: int, d: int) -> Tuple[int, ...]:
    exps = [0] * n
    others = [k for k in range(n) if k != skip]
    for _ in range(d):
        exps[rng.choice(others)] += 1
    return tuple(exps)


def random_word(n: int, k: int, dmax: int, seed: int, degree_cap: int = 40) -> TameWord:
    """A reproducible random tame word with ``k`` factors.

    Elementary addends have one to three terms of degree at most ``dmax``
    with coefficients in {-3..3} minus 0; roughly one factor in four is
    linear.  Factors whose worst-case effect would push some coordinate of
    the expansion above ``degree_cap`` are redrawn, which keeps expansions
    small enough to verify exactly.
    """
    if k < 0 or dmax < 1 or n < 1:
        raise ValueError("need n >= 1, k >= 0 and dmax >= 1")
    rng = random.Random(seed)
    bounds = [1] * n
    factors: List[Factor] = []
    while len(factors) < k:
        if n == 1 or rng.random() < 0.25:
            f = _random_linear(rng, n)
            new = [max(bounds[j] for j in range(n) if row[j]) for row in f.matrix]
        else:
            i = rng.randrange(n)
            terms = {}
            for _ in range(rng.randint(1, 3)):
                exps = _random_exponents(rng, n, i, rng.randint(0, dmax))
                terms[exps] = rng.choice(_COEFFS)
            addend = Polynomial(n, terms)
            if addend.is_zero():
                continue
            f = Elementary(i, addend)
            grown = max(sum(e * b for e, b in zip(m, bounds)) for m in addend.terms)
            new = list(bounds)
            new[i] = max(bounds[i], grown)
        if max(new) > degree_cap:
            continue
        bounds = new
        factors.append(f)
    return TameWord(n, tuple(factors))
