"""Exact tools for multidegrees of tame automorphisms of C^3."""

from .construct import decide, nonmember_trace, realize
from .poly import MINUS_INF, PolyMap, Polynomial
from .semigroup import GeneratorPair, frobenius, gaps, gaps_at_least, member, three_prime_exceptions
from .tame import Elementary, Linear, TameWord, expand, invert, random_word, verify

__version__ = "0.1.0"

__all__ = [
    "MINUS_INF", "PolyMap", "Polynomial",
    "GeneratorPair", "frobenius", "gaps", "gaps_at_least", "member", "three_prime_exceptions",
    "Elementary", "Linear", "TameWord", "expand", "invert", "random_word", "verify",
    "decide", "nonmember_trace", "realize",
]
