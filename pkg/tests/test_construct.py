import json

import pytest

from tamedeg.construct import (
    KNOWN_NONMEMBERS,
    KnownNonMember,
    Member,
    NonMember,
    NonMemberTrace,
    OutOfScope,
    TraceError,
    decide,
    nonmember_trace,
    realize,
    realize_with_representation,
    verdict_from_json,
    verdict_to_json,
)
from tamedeg.poly import PolyMap, Polynomial, mdeg
from tamedeg.reduction import Relation
from tamedeg.semigroup import is_prime, member
from tamedeg.tame import expand, verify

x1, x2, x3 = Polynomial.gens(3)


def test_realize_358():
    F = expand(realize((3, 5, 8)))
    F1, F2 = x1 + x3**3, x2 + x3**5
    assert F == PolyMap([F1, F2, x3 + F1 * F2])
    assert mdeg(F) == (3, 5, 8)


def test_realize_other_examples():
    w = realize((1, 4, 9))
    assert w is not None and mdeg(expand(w)) == (1, 4, 9)
    assert realize((3, 5, 7)) is None
    assert mdeg(expand(realize((1, 1, 1)))) == (1, 1, 1)
    assert mdeg(expand(realize((2, 3, 4, 7)))) == (2, 3, 4, 7)
    with pytest.raises(ValueError):
        realize((5, 3, 8))
    with pytest.raises(ValueError):
        realize((0, 3, 8))


def test_realize_word_shape():
    r = realize_with_representation((5, 7, 24))
    assert r.index == 2 and r.representation.coefficients == (2, 2)
    assert len(r.word) == 3
    assert all(f.addend.is_constant() is False for f in r.word.factors)


def test_realize_soundness_small_sweep():
    for d1 in range(1, 9):
        for d2 in range(d1, 13):
            for d3 in range(d2, 17):
                w = realize((d1, d2, d3))
                if w is None:
                    assert member([d1, d2], d3) is None and member([d1], d2) is None
                else:
                    rep = verify(w)
                    assert rep.mdeg == (d1, d2, d3) and rep.passed


def test_decide_examples():
    v = decide(5, 7, 24)
    assert isinstance(v, Member)
    assert v.representation.coefficients == (2, 2)
    assert mdeg(expand(v.witness)) == (5, 7, 24)

    v = decide(3, 5, 7)
    assert isinstance(v, KnownNonMember)
    assert v.trace is not None and v.trace.recheck()

    v = decide(5, 7, 23)
    assert isinstance(v, NonMember) and v.trace.recheck()

    v = decide(4, 5, 11)
    assert isinstance(v, KnownNonMember) and v.trace is None
    assert "(4,5,11)" in v.citation

    assert isinstance(decide(4, 6, 9), OutOfScope)
    with pytest.raises(ValueError):
        decide(7, 5, 24)
    with pytest.raises(ValueError):
        decide(0, 5, 7)


def test_decide_positive_remarks():
    # d1 = 1, d1 = d2 and d1 = 2 are always members
    for d2 in range(2, 12):
        for d3 in range(d2, 20):
            assert isinstance(decide(1, d2, d3), Member)
            assert isinstance(decide(2, d2, d3), Member)
            assert isinstance(decide(d2, d2, d3), Member)


def test_known_nonmembers_not_realizable():
    for t in KNOWN_NONMEMBERS:
        assert realize(t) is None
        assert isinstance(decide(*t), KnownNonMember)


def test_scope_discipline():
    for d1 in range(1, 12):
        for d2 in range(d1, 16):
            for d3 in range(d2, 26):
                v = decide(d1, d2, d3)
                if isinstance(v, NonMember):
                    assert 3 <= d1 < d2 and is_prime(d1) and is_prime(d2)
                if isinstance(v, OutOfScope):
                    assert not (3 <= d1 < d2 and is_prime(d1) and is_prime(d2))


def test_nonmember_trace_examples():
    t = nonmember_trace(5, 7, 23)
    assert t.sylvester_bound == 24
    assert all(r.holds for r in t.relations())
    assert [c.coordinate for c in t.elementary_checks] == [3, 2, 1]
    assert t.elementary_checks[2].note.startswith("symmetric")

    t = nonmember_trace(3, 5, 7)
    assert t.sylvester_bound == 8 and t.recheck()

    with pytest.raises(ValueError):
        nonmember_trace(5, 7, 24)
    with pytest.raises(ValueError):
        nonmember_trace(4, 7, 9)
    with pytest.raises(ValueError):
        nonmember_trace(5, 7, 6)


def test_trace_residue_checks_match_brute_force():
    t = nonmember_trace(7, 11, 59)
    check3 = t.elementary_checks[0]
    assert all(59 - r * 11 < 0 or (59 - r * 11) % 7 for r in range(7))
    assert len(check3.relations) == 2 + 7


def test_trace_rejects_false_relation():
    t = nonmember_trace(5, 7, 23)
    bad = Relation("d3 below the conductor (p1-1)(p2-1)", 30, "<", 24)
    with pytest.raises(TraceError):
        NonMemberTrace(t.p1, t.p2, t.d3, t.sylvester_bound, bad, t.types_filter, t.elementary_checks)


def test_verdict_json_round_trip():
    for triple in [(5, 7, 24), (5, 7, 23), (3, 5, 7), (4, 5, 11), (4, 6, 9), (1, 1, 1)]:
        v = decide(*triple)
        data = json.loads(json.dumps(verdict_to_json(v)))
        assert verdict_from_json(data) == v
    data = verdict_to_json(decide(5, 7, 24))
    assert data["verdict"] == "member" and data["representation"] == [2, 2]
