"""Pure-Python dense row reduction over F_p.

Same contract as the compiled kernel in ``_rowred_fast``: given a list of
integer rows, return ``(rref_rows, pivot_columns)`` where ``rref_rows`` is
the reduced row echelon form mod p (entries in ``[0, p)``) and pivot columns
were chosen leftmost-first.  RREF is unique, so both kernels agree entry for
entry on every input.
"""

from __future__ import annotations

__all__ = ["rref_mod"]


def rref_mod(rows: list, p: int) -> tuple[list, list]:
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[x % p for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = -1
        for i in range(r, m):
            if a[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
        inv = pow(a[r][c], -1, p)
        if inv != 1:
            a[r] = [(x * inv) % p for x in a[r]]
        arow = a[r]
        for i in range(m):
            f = a[i][c]
            if f and i != r:
                ai = a[i]
                a[i] = [(x - f * y) % p for x, y in zip(ai, arow)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a, pivots
