"""Numerical semigroups generated by small lists of positive integers.

Membership is a plain coin-change sieve; representations use a deterministic
greedy rule (take as many copies of the largest generator as still leave a
representable remainder, then recurse), so witnesses built from them are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import List, Optional, Sequence, Tuple


class NoFrobeniusNumber(ValueError):
    """Raised when a semigroup has no gaps (one generator equals 1)."""


@dataclass(frozen=True)
class GeneratorPair:
    a: int
    b: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise TypeError("generators must be integers")
        if self.a < 1 or self.b < 1:
            raise ValueError(f"generators must be positive, got ({self.a}, {self.b})")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def coprime(self) -> bool:
        return gcd(self.a, self.b) == 1

    def conductor(self) -> int:
        """(a-1)(b-1): every integer from here on is representable."""
        return (self.a - 1) * (self.b - 1)

    def require_coprime(self) -> None:
        if not self.coprime:
            raise ValueError(f"generators {self.a} and {self.b} are not coprime")


@dataclass(frozen=True)
class Representation:
    generators: Tuple[int, ...]
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if len(self.generators) != len(self.coefficients):
            raise ValueError("coefficients must align with generators")
        if any(k < 0 for k in self.coefficients):
            raise ValueError("coefficients must be natural numbers")

    @property
    def value(self) -> int:
        return sum(k * g for k, g in zip(self.coefficients, self.generators))

    def __str__(self):
        parts = [f"{k}·{g}" for k, g in zip(self.coefficients, self.generators)]
        return f"{self.value} = " + (" + ".join(parts) if parts else "0")


@dataclass(frozen=True)
class GapSet:
    pair: GeneratorPair
    gaps: Tuple[int, ...]

    def __contains__(self, k: int) -> bool:
        return k in self.gaps

    def __iter__(self):
        return iter(self.gaps)

    def __len__(self):
        return len(self.gaps)

    @property
    def max(self) -> Optional[int]:
        return self.gaps[-1] if self.gaps else None


def representable_upto(generators: Sequence[int], limit: int) -> List[bool]:
    """Sieve: entry k says whether k is a natural combination of the generators."""
    _check_generators(generators)
    reach = [False] * (limit + 1)
    if limit >= 0:
        reach[0] = True
    for g in sorted(set(generators)):
        for k in range(g, limit + 1):
            if reach[k - g]:
                reach[k] = True
    return reach


def _check_generators(generators: Sequence[int]) -> None:
    if len(generators) == 0:
        raise ValueError("generator list is empty")
    for g in generators:
        if not isinstance(g, int) or g < 1:
            raise ValueError(f"generators must be positive integers, got {g!r}")


def member(generators: Sequence[int], target: int) -> Optional[Representation]:
    """A representation of ``target`` over ``generators``, or ``None``.

    Coefficients align with ``generators`` as given.  Ties are broken by
    maximising the coefficient of the largest generator first (later
    position wins among equal generators), then recursing on the rest.
    """
    _check_generators(generators)
    if target < 0:
        raise ValueError("target must be a natural number")
    order = sorted(range(len(generators)), key=lambda i: (generators[i], i), reverse=True)
    if len(order) == 2:
        return _member_pair(generators, order, target)
    return _member_dp(generators, order, target)


def _member_pair(generators, order, target) -> Optional[Representation]:
    # largest c with target - c*hi divisible by lo, via a modular inverse
    hi, lo = generators[order[0]], generators[order[1]]
    d = gcd(hi, lo)
    if target % d:
        return None
    hi, lo, t = hi // d, lo // d, target // d
    if lo == 1:
        c = t // hi
    else:
        c0 = t * pow(hi, -1, lo) % lo
        if c0 * hi > t:
            return None
        c = c0 + lo * ((t // hi - c0) // lo)
    coeffs = [0, 0]
    coeffs[order[0]] = c
    coeffs[order[1]] = (t - c * hi) // lo
    return Representation(tuple(generators), tuple(coeffs))


def _member_dp(generators, order, target) -> Optional[Representation]:
    # suffix[k][t]: t representable using generators order[k:]
    suffix = [None] * (len(order) + 1)
    base = [False] * (target + 1)
    base[0] = True
    suffix[len(order)] = base
    for k in range(len(order) - 1, -1, -1):
        g = generators[order[k]]
        row = list(suffix[k + 1])
        for t in range(g, target + 1):
            if row[t - g]:
                row[t] = True
        suffix[k] = row
    if not suffix[0][target]:
        return None
    coeffs = [0] * len(generators)
    rest = target
    for k, idx in enumerate(order):
        g = generators[idx]
        c = rest // g
        while not suffix[k + 1][rest - c * g]:
            c -= 1
        coeffs[idx] = c
        rest -= c * g
    return Representation(tuple(generators), tuple(coeffs))


def frobenius(pair: GeneratorPair) -> int:
    """Largest integer not in aN + bN, namely (a-1)(b-1) - 1."""
    pair.require_coprime()
    if pair.a == 1:
        raise NoFrobeniusNumber(f"<{pair.a}, {pair.b}> contains every natural number")
    return pair.conductor() - 1


def gaps(pair: GeneratorPair) -> GapSet:
    """All naturals outside aN + bN, found by sieving below the conductor."""
    pair.require_coprime()
    if pair.a == 1:
        return GapSet(pair, ())
    bound = pair.conductor()
    reach = representable_upto((pair.a, pair.b), bound - 1)
    return GapSet(pair, tuple(k for k in range(1, bound) if not reach[k]))


def gaps_at_least(pair: GeneratorPair, m: int) -> List[int]:
    return [k for k in gaps(pair) if k >= m]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_between(lo: int, hi: int) -> List[int]:
    return [p for p in range(lo, hi + 1) if is_prime(p)]


def three_prime_exceptions(p2: int) -> List[int]:
    """Closed form {2*p2 - 3k : k = 1..floor(p2/3)} for a prime p2 > 3, ascending."""
    if not is_prime(p2) or p2 <= 3:
        raise ValueError(f"expected a prime greater than 3, got {p2}")
    return sorted(2 * p2 - 3 * k for k in range(1, p2 // 3 + 1))


def residue_classes_disjoint(p1: int, p2: int, length: int | None = None) -> bool:
    """Check that the classes r*p2 + p1*N (r = 0..p1-1) never overlap on [0, length)."""
    if length is None:
        length = p1 * p2
    owner = [None] * length
    for r in range(p1):
        for k in range(r * p2, length, p1):
            if owner[k] is not None:
                return False
            owner[k] = r
    return True
