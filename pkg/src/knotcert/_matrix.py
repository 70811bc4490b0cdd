"""Exact integer linear algebra for small symmetric matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["symmetric_signature", "integer_determinant"]


def symmetric_signature(rows: Sequence[Sequence[int]]) -> int:
    """Signature (positive minus negative eigenvalue count) of a symmetric
    integer matrix, by congruence diagonalization over the rationals."""
    n = len(rows)
    m = [[Fraction(rows[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix is not symmetric")
    active = list(range(n))
    sig = 0
    while active:
        pivot = next((i for i in active if m[i][i] != 0), None)
        if pivot is not None:
            d = m[pivot][pivot]
            sig += 1 if d > 0 else -1
            rest = [i for i in active if i != pivot]
            for r in rest:
                f = m[r][pivot] / d
                if f:
                    for c in rest:
                        m[r][c] -= f * m[pivot][c]
            active = rest
            continue
        off = next(((i, j) for i in active for j in active if i < j and m[i][j] != 0), None)
        if off is None:
            break
        i, j = off
        # Hyperbolic pair: contributes one +1 and one -1, so nothing to sig.
        a = m[i][j]
        rest = [k for k in active if k not in (i, j)]
        for r in rest:
            for c in rest:
                m[r][c] -= (m[r][i] * m[j][c] + m[r][j] * m[i][c]) / a
        active = rest
    return sig


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
