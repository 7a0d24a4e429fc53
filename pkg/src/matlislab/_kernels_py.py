"""Pure-Python row reduction kernels.

Reference implementations of the hot kernels; the Cython module
``matlislab._kernels`` provides the same two functions with identical
output.  Backend selection happens in :mod:`matlislab.linalg`.
"""

from math import gcd

BACKEND = "python"


def rref_fp(rows, p):
    """Reduced row echelon form over F_p.

    ``rows`` is a list of lists of ints (any representatives mod p).
    Returns ``(rref_rows, pivots)`` with zero rows dropped, pivot
    entries equal to 1 and entries normalized into ``range(p)``.
    """
    m = [[v % p for v in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        row_r = m[r]
        inv = pow(row_r[c], p - 2, p)
        if inv != 1:
            for k in range(c, ncols):
                row_r[k] = (row_r[k] * inv) % p
        for i in range(nrows):
            if i == r:
                continue
            a = m[i][c]
            if a:
                row_i = m[i]
                for k in range(c, ncols):
                    row_i[k] = (row_i[k] - a * row_r[k]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def _row_gcd(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def rref_int(rows):
    """Fraction-free Gauss-Jordan over the integers.

    ``rows`` is a list of lists of ints.  Returns ``(rows, pivots)``
    where each surviving row is primitive (content 1) with a positive
    pivot entry and zeros elsewhere in every pivot column.  Dividing
    each row by its pivot yields the reduced row echelon form over Q.
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if m[i][c]:
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
            a = m[i][c]
            if a:
                row_i = m[i]
                for k in range(ncols):
                    row_i[k] = piv * row_i[k] - a * row_r[k]
                g = _row_gcd(row_i)
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
        g = _row_gcd(row)
        if row[pivots[i]] < 0:
            g = -g
        if g != 1:
            row = [v // g for v in row]
        out.append(row)
    return out, pivots
