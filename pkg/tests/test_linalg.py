from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tamedeg import linalg


def _rank(rows):
    # plain rational row reduction, independent of the fraction-free solver
    m = [[Fraction(v) for v in r] for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _sparse(dense):
    return [{j: v for j, v in enumerate(row) if v} for row in dense]


def test_solve_small_systems():
    assert linalg.solve(_sparse([[1, 1], [1, -1]]), [3, 1], 2) == [2, 1]
    assert linalg.solve(_sparse([[2, 4]]), [Fraction(1, 3)], 2) == [Fraction(1, 6), 0]
    assert linalg.solve(_sparse([[1, 1], [2, 2]]), [1, 3], 2) is None
    assert linalg.solve([{}], [0], 3) == [0, 0, 0]
    assert linalg.solve([{}], [1], 3) is None


entries = st.integers(-3, 3) | st.fractions(-2, 2, max_denominator=3)


@settings(max_examples=150)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_solve_agrees_with_rank_oracle(nrows, ncols, data):
    A = [[data.draw(entries) for _ in range(ncols)] for _ in range(nrows)]
    b = [data.draw(entries) for _ in range(nrows)]
    x = linalg.solve(_sparse(A), b, ncols)
    consistent = _rank(A) == _rank([row + [bi] for row, bi in zip(A, b)])
    assert (x is not None) == consistent
    if x is not None:
        for row, bi in zip(A, b):
            assert sum(Fraction(a) * xi for a, xi in zip(row, x)) == bi


def test_det_and_inverse():
    m = [[2, 1, 0], [0, 1, 3], [1, 0, 1]]
    assert linalg.det(m) == 2 * 1 * 1 + 1 * 3 * 1
    inv = linalg.inverse(m)
    for i in range(3):
        for j in range(3):
            assert sum(Fraction(m[i][k]) * inv[k][j] for k in range(3)) == (i == j)
    assert linalg.det([[1, 2], [2, 4]]) == 0
    with pytest.raises(ZeroDivisionError):
        linalg.inverse([[1, 2], [2, 4]])
