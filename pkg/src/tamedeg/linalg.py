"""Exact linear algebra over the rationals.

``solve`` clears denominators row by row and runs integer Gauss-Jordan
elimination, keeping every row primitive (content divided out), so no
fractions appear until the final back-substitution.  Rows are sparse dicts
because the systems built by the reduction search are very sparse.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence

Row = Dict[int, int]


def _integer_row(row: Dict[int, Fraction], rhs) -> tuple[Row, int]:
    # scale a rational row (and its rhs) to coprime integers
    values = list(row.values()) + [rhs]
    den = 1
    for v in values:
        den = lcm(den, Fraction(v).denominator)
    irow = {c: int(Fraction(v) * den) for c, v in row.items() if v}
    irhs = int(Fraction(rhs) * den)
    return _primitive(irow, irhs)


def _primitive(row: Row, rhs: int) -> tuple[Row, int]:
    g = abs(rhs)
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row, rhs
    if g > 1:
        row = {c: v // g for c, v in row.items()}
        rhs //= g
    return row, rhs


def solve(rows: Sequence[Dict[int, object]], rhs: Sequence[object], ncols: int) -> Optional[List]:
    """Solve ``A x = b`` exactly; free variables are set to zero.

    ``rows[r]`` maps column index to coefficient (missing means zero).
    Returns a list of ``ncols`` rationals, or ``None`` if the system is
    inconsistent.
    """
    if len(rows) != len(rhs):
        raise ValueError("rows and rhs differ in length")
    work = [_integer_row(r, b) for r, b in zip(rows, rhs)]
    pivots: List[tuple[int, Row, int]] = []  # (column, row, rhs), fully reduced
    for row, b in work:
        # reduce against existing pivots first
        for col, prow, pb in pivots:
            v = row.get(col)
            if v:
                row, b = _eliminate(row, b, prow, pb, col, v)
        if not row:
            if b != 0:
                return None
            continue
        col = min(row)
        # back-eliminate the new pivot column from existing pivot rows
        for k, (pcol, prow, pb) in enumerate(pivots):
            v = prow.get(col)
            if v:
                prow, pb = _eliminate(prow, pb, row, b, col, v)
                pivots[k] = (pcol, prow, pb)
        pivots.append((col, row, b))
    x: List = [0] * ncols
    for col, prow, pb in pivots:
        # after full reduction the only nonzero pivot column left is col
        x[col] = Fraction(pb, prow[col]) if pb % prow[col] else pb // prow[col]
    return x


def _eliminate(row: Row, b: int, prow: Row, pb: int, col: int, v: int) -> tuple[Row, int]:
    """Return ``p*row - v*prow`` (p = prow[col]) made primitive; column ``col`` vanishes."""
    p = prow[col]
    g = gcd(p, v)
    a, c = p // g, v // g
    out = {k: a * w for k, w in row.items()}
    for k, w in prow.items():
        s = out.get(k, 0) - c * w
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return _primitive(out, a * b - c * pb)


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant of a square rational matrix by elimination."""
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return result


def inverse(matrix: Sequence[Sequence]) -> List[List[Fraction]]:
    """Inverse of a square rational matrix by Gauss-Jordan; raises if singular."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [v / p for v in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [row[n:] for row in m]
