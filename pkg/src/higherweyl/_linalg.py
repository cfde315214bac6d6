from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

Number = Union[int, Fraction]


def bareiss_det(rows: Sequence[Sequence[Number]]) -> Number:
    """Determinant by fraction-free elimination.

    Every division is exact for integer input, so the result is exact.  Also
    works for Fraction entries (the divisions are then field divisions).
    """
    n = len(rows)
    a = [list(r) for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for p in range(n - 1):
        if a[p][p] == 0:
            swap = next((i for i in range(p + 1, n) if a[i][p] != 0), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        piv = a[p][p]
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                num = a[i][j] * piv - a[i][p] * a[p][j]
                if isinstance(num, int) and isinstance(prev, int):
                    q, rem = divmod(num, prev)
                    assert rem == 0, "inexact division in Bareiss step"
                    a[i][j] = q
                else:
                    a[i][j] = num / prev
            a[i][p] = 0
        prev = piv
    return sign * a[n - 1][n - 1]
