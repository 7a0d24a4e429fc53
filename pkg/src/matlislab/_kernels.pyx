# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction kernels.

Same contract and same output, bit for bit, as matlislab._kernels_py.
The F_p kernel runs on C int64 (p < 2^31, so products fit); the integer
kernel keeps Python ints (entries are unbounded) but moves the loop
bookkeeping into C.
"""

from math import gcd

from libc.stdlib cimport malloc, free

BACKEND = "cython"


def rref_fp(rows, long long p):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef Py_ssize_t i, k, r, c, pr
    cdef long long a, inv, piv
    if nrows == 0 or ncols == 0:
        return [list(row) for row in rows], []
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for k in range(ncols):
                m[i * ncols + k] = (<long long> row[k]) % p
                if m[i * ncols + k] < 0:
                    m[i * ncols + k] += p
        pivots = []
        r = 0
        for c in range(ncols):
            pr = -1
            for i in range(r, nrows):
                if m[i * ncols + c] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for k in range(ncols):
                    a = m[r * ncols + k]
                    m[r * ncols + k] = m[pr * ncols + k]
                    m[pr * ncols + k] = a
            piv = m[r * ncols + c]
            inv = _inv_mod(piv, p)
            if inv != 1:
                for k in range(c, ncols):
                    m[r * ncols + k] = (m[r * ncols + k] * inv) % p
            for i in range(nrows):
                if i == r:
                    continue
                a = m[i * ncols + c]
                if a != 0:
                    for k in range(c, ncols):
                        m[i * ncols + k] = (m[i * ncols + k] - a * m[r * ncols + k]) % p
                        if m[i * ncols + k] < 0:
                            m[i * ncols + k] += p
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        out = []
        for i in range(r):
            out.append([m[i * ncols + k] for k in range(ncols)])
        return out, pivots
    finally:
        free(m)


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long t = 0, newt = 1, rr = p, newr = a % p, q, tmp
    while newr != 0:
        q = rr / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = rr - q * newr
        rr = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_int(rows):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef Py_ssize_t i, k, r, c, pr
    m = [list(row) for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        row_r = m[r]
        piv = row_r[c]
        for i in range(nrows):
            if i == r:
                continue
            row_i = m[i]
            a = row_i[c]
            if a != 0:
                for k in range(ncols):
                    row_i[k] = piv * row_i[k] - a * row_r[k]
                g = 0
                for k in range(ncols):
                    v = row_i[k]
                    if v != 0:
                        g = gcd(g, v)
                        if g == 1:
                            break
                if g > 1:
                    for k in range(ncols):
                        row_i[k] //= g
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    out = []
    for i in range(r):
        row = m[i]
        g = 0
        for k in range(ncols):
            v = row[k]
            if v != 0:
                g = gcd(g, v)
                if g == 1:
                    break
        if row[pivots[i]] < 0:
            g = -g
        if g != 1:
            row = [v // g for v in row]
        out.append(row)
    return out, pivots
