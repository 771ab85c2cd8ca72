# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense row reduction over F_p.

Contract is identical to ``_rowred_pure.rref_mod``: RREF with leftmost pivot
columns, entries reduced into [0, p).  Restricted to p < 2**31 so that all
intermediate products fit in 64 bits; the dispatcher in ``linalg`` falls back
to the pure kernel for larger moduli.
"""

from libc.stdlib cimport free, malloc


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p, p prime
    cdef long long t = 0, newt = 1, r = p, newr = a % p
    cdef long long q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_mod(list rows, long long p):
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return [list(row) for row in rows], []
    if p >= (<long long>1) << 31:
        raise OverflowError("modulus too large for the compiled kernel")

    cdef long long* a = <long long*> malloc(m * n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, r, c, pr
    cdef long long v, inv, f
    cdef object row
    try:
        for i in range(m):
            row = rows[i]
            for j in range(n):
                v = <long long> (row[j] % p)
                a[i * n + j] = v

        pivots = []
        r = 0
        for c in range(n):
            pr = -1
            for i in range(r, m):
                if a[i * n + c] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for j in range(n):
                    v = a[r * n + j]
                    a[r * n + j] = a[pr * n + j]
                    a[pr * n + j] = v
            inv = _inv_mod(a[r * n + c], p)
            if inv != 1:
                for j in range(n):
                    a[r * n + j] = (a[r * n + j] * inv) % p
            for i in range(m):
                f = a[i * n + c]
                if f != 0 and i != r:
                    for j in range(n):
                        v = (a[i * n + j] - f * a[r * n + j]) % p
                        if v < 0:
                            v += p
                        a[i * n + j] = v
            pivots.append(c)
            r += 1
            if r == m:
                break

        out = [[a[i * n + j] for j in range(n)] for i in range(m)]
        return out, pivots
    finally:
        free(a)
