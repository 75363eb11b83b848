"""Exact sparse multivariate polynomials over the rationals.

A polynomial in ``n`` variables is a mapping from exponent tuples to nonzero
rational coefficients.  Integral coefficients are kept as ``int`` and the rest
as ``Fraction``; both compare and hash consistently, so the mixed storage is
invisible to callers and keeps the common (integral) case fast.

  x1^2*x2 + 3/2*x3 - 1   ->   {(2, 1, 0): 1, (0, 0, 1): Fraction(3, 2), (0, 0, 0): -1}

Variables are 0-indexed in the Python API and printed 1-indexed (``x1..xn``).
The zero polynomial has no terms and degree ``MINUS_INF``.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction
from operator import add as _add
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Rational = Union[int, Fraction]
Monomial = Tuple[int, ...]


@functools.total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial; below every integer, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("minus-infinity")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "MINUS_INF"

    def __reduce__(self):
        return (_MinusInfinity, ())


MINUS_INF = _MinusInfinity()
Degree = Union[int, _MinusInfinity]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def grlex_key(m: Monomial) -> Tuple[int, Monomial]:
    """Sort key for graded lexicographic order (x1 > x2 > ... > xn)."""
    return (sum(m), m)


def _norm(c) -> Rational:
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _packer(nvars: int, shift: int):
    mask = (1 << shift) - 1
    if nvars == 3:
        s2 = 2 * shift
        return (lambda m: (m[0] << s2) | (m[1] << shift) | m[2],
                lambda k: (k >> s2, (k >> shift) & mask, k & mask))
    if nvars == 2:
        return (lambda m: (m[0] << shift) | m[1],
                lambda k: (k >> shift, k & mask))
    shifts = [shift * (nvars - 1 - i) for i in range(nvars)]

    def pack(m: Monomial) -> int:
        k = 0
        for e in m:
            k = (k << shift) | e
        return k

    def unpack(k: int) -> Monomial:
        return tuple((k >> s) & mask for s in shifts)

    return pack, unpack


class Polynomial:
    """Immutable polynomial with rational coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms", "_degree")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Rational] = ()):
        if nvars < 0:
            raise ValueError(f"nvars must be nonnegative, got {nvars}")
        clean: Dict[Monomial, Rational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent {exps} has length {len(exps)}, expected {nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = _norm(c)
            if exps in clean:
                c = _norm(clean[exps] + c)
            clean[exps] = c
        self.nvars = nvars
        self._terms = {m: c for m, c in clean.items() if c != 0}
        self._degree = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Monomial, Rational]) -> "Polynomial":
        # trusted constructor: keys valid, no zero coefficients
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._degree = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, value: Rational) -> "Polynomial":
        value = _norm(value)
        return cls._raw(nvars, {(0,) * nvars: value} if value != 0 else {})

    @classmethod
    def var(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls._raw(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Rational = 1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def gens(cls, nvars: int) -> Tuple["Polynomial", ...]:
        return tuple(cls.var(nvars, i) for i in range(nvars))

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Rational]:
        return self._terms

    def sorted_terms(self) -> list:
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def degree(self) -> Degree:
        if self._degree is None:
            self._degree = max(map(sum, self._terms), default=MINUS_INF)
        return self._degree

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or self.degree() == 0

    def constant_value(self) -> Rational:
        return self._terms.get((0,) * self.nvars, 0)

    def coefficient(self, exps: Sequence[int]) -> Rational:
        return self._terms.get(tuple(exps), 0)

    def variables(self) -> set:
        """Indices of variables that occur in some term."""
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Rational]]:
        return iter(self.sorted_terms())

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(self.nvars, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        acc = dict(big)
        for m, c in small.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = _norm(s) if type(s) is Fraction else s
            else:
                acc.pop(m, None)
        return Polynomial._raw(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            if other == 0:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw(
                self.nvars, {m: _norm(c * other) for m, c in self._terms.items()}
            )
        other = self._coerce(other)
        if not self._terms or not other._terms:
            return Polynomial.zero(self.nvars)
        if len(self._terms) == 1 or len(other._terms) == 1:
            if len(self._terms) == 1:
                (m1, c1), big = next(iter(self._terms.items())), other._terms
            else:
                (m1, c1), big = next(iter(other._terms.items())), self._terms
            return Polynomial._raw(
                self.nvars, {tuple(map(_add, m1, m)): _norm(c1 * c) for m, c in big.items()}
            )
        # pack exponent vectors into ints so monomial products are integer additions
        shift = (self.degree() + other.degree()).bit_length() or 1
        pack, unpack = _packer(self.nvars, shift)
        b_items = [(pack(m), c) for m, c in other._terms.items()]
        acc: Dict[int, Rational] = {}
        get = acc.get
        for m1, c1 in self._terms.items():
            k1 = pack(m1)
            for k2, c2 in b_items:
                k = k1 + k2
                acc[k] = get(k, 0) + c1 * c2
        return Polynomial._raw(
            self.nvars,
            {unpack(k): (_norm(c) if type(c) is Fraction else c) for k, c in acc.items() if c},
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- evaluation and text ------------------------------------------------

    def __call__(self, *point: Rational) -> Rational:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        total = 0
        for m, c in self._terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t = t * x**e
            total += t
        return _norm(total)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.nvars}, {format_polynomial(self)!r})"

    @classmethod
    def parse(cls, text: str, nvars: int | None = None) -> "Polynomial":
        return parse_polynomial(text, nvars)

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"c": format_rational(c), "e": list(m)} for m, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        nvars = data["nvars"]
        if not isinstance(nvars, int):
            raise ValueError("nvars must be an integer")
        terms = {}
        for t in data["terms"]:
            m = tuple(t["e"])
            if m in terms:
                raise ValueError(f"duplicate monomial {list(m)}")
            terms[m] = parse_rational(t["c"])
        return cls(nvars, terms)


# -- rational and polynomial text formats --------------------------------


def format_rational(c: Rational) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_rational(text) -> Rational:
    if isinstance(text, int) and not isinstance(text, bool):
        return text
    if not isinstance(text, str) or not re.fullmatch(r"\s*[-+]?\d+(\s*/\s*\d+)?\s*", text):
        raise ValueError(f"not a rational: {text!r}")
    value = Fraction(text.replace(" ", ""))
    return _norm(value)


def _format_monomial(m: Monomial, names: Sequence[str] | None = None) -> str:
    parts = []
    for i, e in enumerate(m):
        name = names[i] if names else f"x{i + 1}"
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, names: Sequence[str] | None = None) -> str:
    if f.is_zero():
        return "0"
    out = []
    for m, c in f.sorted_terms():
        sign = "-" if c < 0 else "+"
        mag = abs(Fraction(c))
        mono = _format_monomial(m, names)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


_TERM_SPLIT = re.compile(r"([+-])")
_FACTOR = re.compile(r"^(?:x(\d+)(?:\^(\d+))?|(\d+(?:/\d+)?))$")


def parse_polynomial(text: str, nvars: int | None = None) -> Polynomial:
    """Parse ``x1^2*x2 + 3/2*x3 - 1``.  ``nvars`` defaults to the largest index seen."""
    s = text.replace(" ", "").replace("\t", "").replace("\n", "")
    if not s:
        raise ValueError("empty polynomial text")
    pieces = _TERM_SPLIT.split(s)
    if pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    if len(pieces) % 2:
        raise ValueError(f"malformed polynomial {text!r}")
    raw_terms = []
    max_index = 0
    for sign, body in zip(pieces[0::2], pieces[1::2]):
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coeff: Rational = -1 if sign == "-" else 1
        powers: Dict[int, int] = {}
        for factor in body.split("*"):
            mt = _FACTOR.match(factor)
            if not mt:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            if mt.group(3) is not None:
                coeff = coeff * Fraction(mt.group(3))
            else:
                idx = int(mt.group(1))
                if idx < 1:
                    raise ValueError("variables are numbered from x1")
                powers[idx] = powers.get(idx, 0) + int(mt.group(2) or 1)
                max_index = max(max_index, idx)
        raw_terms.append((coeff, powers))
    n = max_index if nvars is None else nvars
    if max_index > n:
        raise ValueError(f"x{max_index} used but nvars={n}")
    acc: Dict[Monomial, Rational] = {}
    for coeff, powers in raw_terms:
        m = tuple(powers.get(i + 1, 0) for i in range(n))
        acc[m] = acc.get(m, 0) + coeff
    return Polynomial(n, acc)


# -- module-level operations ----------------------------------------------


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def degree(f: Polynomial) -> Degree:
    return f.degree()


def top(f: Polynomial) -> Polynomial:
    """Highest homogeneous part of a nonzero polynomial."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no highest homogeneous part")
    d = f.degree()
    return Polynomial._raw(f.nvars, {m: c for m, c in f.terms.items() if sum(m) == d})


def partial(f: Polynomial, i: int) -> Polynomial:
    if not 0 <= i < f.nvars:
        raise IndexError(f"variable index {i} out of range for {f.nvars} variables")
    acc = {}
    for m, c in f.terms.items():
        e = m[i]
        if e:
            m2 = m[:i] + (e - 1,) + m[i + 1 :]
            acc[m2] = c * e
    return Polynomial._raw(f.nvars, acc)


class _PowerCache:
    """Lazily computed powers of one polynomial."""

    def __init__(self, base: Polynomial):
        self._powers = [Polynomial.const(base.nvars, 1), base]

    def __getitem__(self, k: int) -> Polynomial:
        p = self._powers
        while len(p) <= k:
            p.append(p[-1] * p[1])
        return p[k]


def compose(g: Polynomial, args: Sequence[Polynomial]) -> Polynomial:
    """Substitute ``args[j]`` for the variable ``x_{j+1}`` of ``g``.

    Evaluated by nested Horner schemes, one variable at a time, so the
    running value is only ever multiplied by a single argument (or a small
    power of it) instead of forming products of large powers.
    """
    if len(args) != g.nvars:
        raise ValueError(f"g has {g.nvars} variables but {len(args)} arguments were given")
    if not args:
        raise ValueError("compose needs at least one argument to fix the target arity")
    n = args[0].nvars
    if any(a.nvars != n for a in args):
        raise ValueError("all arguments must share the same number of variables")
    caches = [_PowerCache(a) for a in args]
    return _horner(list(g.terms.items()), 0, caches, n)


def _horner(terms: list, var: int, caches: list, n: int) -> Polynomial:
    if var == len(caches):
        return Polynomial.const(n, sum(c for _, c in terms))
    groups: Dict[int, list] = {}
    for m, c in terms:
        groups.setdefault(m[var], []).append((m, c))
    exps = sorted(groups, reverse=True)
    result = None
    for e, nxt in zip(exps, exps[1:] + [0]):
        inner = _horner(groups[e], var + 1, caches, n)
        result = inner if result is None else result + inner
        if e > nxt:
            result = result * caches[var][e - nxt]
    return result if result is not None else Polynomial.zero(n)


def jacobian_minors(f: Polynomial, g: Polynomial) -> Iterator[Tuple[int, int, Polynomial]]:
    """All 2x2 minors df/dxi*dg/dxj - df/dxj*dg/dxi for i < j."""
    if f.nvars != g.nvars:
        raise ValueError(f"arity mismatch: {f.nvars} vs {g.nvars} variables")
    df = [partial(f, i) for i in range(f.nvars)]
    dg = [partial(g, i) for i in range(g.nvars)]
    for i in range(f.nvars):
        for j in range(i + 1, f.nvars):
            yield i, j, df[i] * dg[j] - df[j] * dg[i]


def alg_independent(f: Polynomial, g: Polynomial) -> bool:
    """Jacobian criterion (characteristic zero): some 2x2 minor is nonzero."""
    return any(not minor.is_zero() for _, _, minor in jacobian_minors(f, g))


def poisson_degree(f: Polynomial, g: Polynomial) -> int:
    """Degree of the Poisson bracket [f, g]: 2 + max minor degree, or 0 if dependent."""
    if f.nvars < 2:
        raise ValueError("the Poisson bracket degree needs at least two variables")
    best = MINUS_INF
    for _, _, minor in jacobian_minors(f, g):
        best = max(best, minor.degree())
    if best == MINUS_INF:
        return 0
    return 2 + best


def top_in_algebra_of(f: Polynomial, g: Polynomial) -> bool:
    """Decide whether top(f) lies in k[top(g)]."""
    if f.is_zero() or g.is_zero():
        raise ValueError("top_in_algebra_of needs nonzero polynomials")
    df, dg = f.degree(), g.degree()
    if dg == 0:
        return df == 0
    if df % dg:
        return False
    tf = top(f)
    candidate = top(g) ** (df // dg)
    # candidate and tf are both nonzero; compare up to a scalar
    m0, c0 = next(iter(candidate.terms.items()))
    scale = Fraction(tf.coefficient(m0)) / Fraction(c0)
    return scale != 0 and tf == candidate * scale


def homogeneous_part(f: Polynomial, d: int) -> Polynomial:
    return Polynomial._raw(f.nvars, {m: c for m, c in f.terms.items() if sum(m) == d})


# -- polynomial maps -------------------------------------------------------


class PolyMap:
    """A polynomial endomorphism ``(F1, ..., Fn)`` of affine n-space."""

    __slots__ = ("n", "coords")

    def __init__(self, coords: Iterable[Polynomial]):
        coords = tuple(coords)
        n = len(coords)
        for c in coords:
            if c.nvars != n:
                raise ValueError(f"coordinate in {c.nvars} variables for a map of size {n}")
        self.n = n
        self.coords = coords

    @classmethod
    def identity(cls, n: int) -> "PolyMap":
        return cls(Polynomial.gens(n))

    def __getitem__(self, i: int) -> Polynomial:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, PolyMap) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "PolyMap(" + ", ".join(str(c) for c in self.coords) + ")"

    def compose(self, inner: "PolyMap") -> "PolyMap":
        """``self ∘ inner``: substitute ``inner`` into every coordinate of ``self``."""
        if inner.n != self.n:
            raise ValueError(f"cannot compose maps of sizes {self.n} and {inner.n}")
        return PolyMap(compose(c, inner.coords) for c in self.coords)

    def permute(self, perm: Sequence[int]) -> "PolyMap":
        """Reorder coordinates: result[i] = self[perm[i]]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError(f"{perm} is not a permutation of range({self.n})")
        return PolyMap(self.coords[p] for p in perm)

    def is_identity(self) -> bool:
        return self == PolyMap.identity(self.n)

    def mdeg(self) -> Tuple[int, ...]:
        return mdeg(self)

    def jacobian_det(self) -> Polynomial:
        return jacobian_det(self)

    def to_json(self) -> dict:
        return {"n": self.n, "coords": [c.to_json() for c in self.coords]}

    @classmethod
    def from_json(cls, data: Mapping) -> "PolyMap":
        coords = [Polynomial.from_json(c) for c in data["coords"]]
        if data.get("n", len(coords)) != len(coords):
            raise ValueError("n does not match the number of coordinates")
        return cls(coords)


def mdeg(F: PolyMap) -> Tuple[int, ...]:
    degs = []
    for i, c in enumerate(F.coords):
        if c.is_zero():
            raise ValueError(f"coordinate {i + 1} is the zero polynomial")
        degs.append(c.degree())
    return tuple(degs)


def _det(rows: list) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = entry * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else Polynomial.zero(rows[0][0].nvars)


def jacobian_det(F: PolyMap) -> Polynomial:
    """Determinant of the Jacobian matrix by cofactor expansion (n is small here)."""
    if F.n == 0:
        return Polynomial.const(0, 1)
    rows = [[partial(c, j) for j in range(F.n)] for c in F.coords]
    return _det(rows)
