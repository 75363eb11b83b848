from math import gcd

import pytest
from hypothesis import given, strategies as st

from tamedeg.semigroup import (
    GeneratorPair,
    NoFrobeniusNumber,
    frobenius,
    gaps,
    gaps_at_least,
    is_prime,
    member,
    primes_between,
    residue_classes_disjoint,
    three_prime_exceptions,
)


def brute_representable(a, b, k):
    return any((k - i * a) % b == 0 for i in range(k // a + 1))


def test_member_examples():
    rep = member([5, 7], 24)
    assert rep.coefficients == (2, 2) and rep.value == 24
    # oracle: the only way to write 24 with 5s and 7s
    assert [(i, (24 - 5 * i) // 7) for i in range(24 // 5 + 1) if (24 - 5 * i) % 7 == 0] == [(2, 2)]
    assert member([5, 7], 23) is None
    assert member([3], 0).coefficients == (0,)
    with pytest.raises(ValueError):
        member([], 3)
    with pytest.raises(ValueError):
        member([0, 2], 3)


def test_member_tie_break_prefers_largest_generator():
    assert member([2, 3], 12).coefficients == (0, 4)
    assert member([3, 2], 12).coefficients == (4, 0)
    assert member([1, 4], 9).coefficients == (1, 2)
    assert member([3, 3], 6).coefficients == (0, 2)
    assert member([2, 5, 7], 24).coefficients == (0, 2, 2)


@given(st.lists(st.integers(1, 12), min_size=1, max_size=4), st.integers(0, 80))
def test_member_representations_are_valid(gens, target):
    rep = member(gens, target)
    brute = _brute_general(gens, target)
    assert (rep is not None) == brute
    if rep is not None:
        assert sum(k * g for k, g in zip(rep.coefficients, gens)) == target
        assert all(k >= 0 for k in rep.coefficients)


def _brute_general(gens, target):
    reach = {0}
    for g in gens:
        reach = {r + k * g for r in reach for k in range(target // g + 1) if r + k * g <= target}
    return target in reach


def test_frobenius_examples():
    assert frobenius(GeneratorPair(5, 7)) == 23
    assert frobenius(GeneratorPair(7, 11)) == 59
    assert frobenius(GeneratorPair(2, 3)) == 1
    assert frobenius(GeneratorPair(11, 7)) == 59
    with pytest.raises(ValueError):
        frobenius(GeneratorPair(4, 6))
    with pytest.raises(NoFrobeniusNumber):
        frobenius(GeneratorPair(1, 5))


def test_gaps_examples():
    assert gaps(GeneratorPair(3, 5)).gaps == (1, 2, 4, 7)
    g57 = gaps(GeneratorPair(5, 7))
    assert g57.gaps == (1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23)
    assert g57.gaps == tuple(k for k in range(1, 60) if not brute_representable(5, 7, k))
    assert len(g57) == 12 == (5 - 1) * (7 - 1) // 2
    assert gaps(GeneratorPair(2, 3)).gaps == (1,)
    assert gaps(GeneratorPair(1, 9)).gaps == ()
    with pytest.raises(ValueError):
        gaps(GeneratorPair(4, 6))


def test_gaps_at_least_examples():
    assert gaps_at_least(GeneratorPair(5, 11), 11) == [12, 13, 14, 17, 18, 19, 23, 24, 28, 29, 34, 39]
    assert gaps_at_least(GeneratorPair(5, 13), 13) == [
        14, 16, 17, 19, 21, 22, 24, 27, 29, 32, 34, 37, 42, 47]
    assert gaps_at_least(GeneratorPair(3, 7), 7) == [8, 11]
    assert [2 * 7 - 3 * k for k in (2, 1)] == [8, 11]


def test_three_prime_examples():
    assert three_prime_exceptions(5) == [7] == gaps_at_least(GeneratorPair(3, 5), 5)
    assert three_prime_exceptions(7) == [8, 11]
    assert three_prime_exceptions(11) == [13, 16, 19] == gaps_at_least(GeneratorPair(3, 11), 11)
    for bad in (3, 9, 2, 1):
        with pytest.raises(ValueError):
            three_prime_exceptions(bad)


def test_generator_pair_normalizes():
    assert GeneratorPair(7, 5) == GeneratorPair(5, 7)
    with pytest.raises(ValueError):
        GeneratorPair(0, 3)


def test_sylvester_properties_small_range():
    for a in range(2, 21):
        for b in range(a + 1, 21):
            if gcd(a, b) != 1:
                continue
            pair = GeneratorPair(a, b)
            gs = gaps(pair)
            assert gs.max == frobenius(pair)
            assert len(gs) == (a - 1) * (b - 1) // 2
            c = (a - 1) * (b - 1)
            assert all(member([a, b], k) is not None for k in range(c, c + a * b + 1))
            assert all(not brute_representable(a, b, k) for k in gs)


def test_three_prime_formula_matches_sieve_up_to_199():
    for p in primes_between(5, 199):
        assert three_prime_exceptions(p) == gaps_at_least(GeneratorPair(3, p), p)


def test_residue_classes_disjoint():
    for p1, p2 in [(3, 5), (5, 7), (7, 11), (5, 13), (11, 13)]:
        assert residue_classes_disjoint(p1, p2)
    # a shared factor makes two classes collide
    assert not residue_classes_disjoint(4, 6)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(st.integers(1, 40), st.integers(1, 40), st.integers(0, 400))
def test_pair_closed_form_agrees_with_dp(a, b, target):
    from tamedeg.semigroup import _member_dp

    order = sorted(range(2), key=lambda i: ([a, b][i], i), reverse=True)
    assert member([a, b], target) == _member_dp([a, b], order, target)
