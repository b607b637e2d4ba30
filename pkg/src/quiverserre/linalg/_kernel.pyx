# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled port of ``_kernel_py.rref_integer``.

Entries stay Python integers (arbitrary precision); the speed-up comes from
typed loop indices, direct list access and avoiding generator overhead.
"""

from math import gcd


def rref_integer(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list pivots = []
    cdef list prow, row, new
    cdef object v, a, best, p, f, g, b, x, y, cg
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        best = 0
        for i in range(r, nrows):
            v = (<list>rows[i])[c]
            if v:
                a = v if v > 0 else -v
                if piv < 0 or a < best:
                    piv = i
                    best = a
                    if a == 1:
                        break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = <list>rows[r]
        p = prow[c]
        if p < 0:
            prow = [-x for x in prow]
            rows[r] = prow
            p = -p
        for i in range(nrows):
            if i == r:
                continue
            row = <list>rows[i]
            f = row[c]
            if not f:
                continue
            g = gcd(p, f)
            a = p // g
            b = f // g
            new = [None] * ncols
            if a == 1:
                for j in range(ncols):
                    y = prow[j]
                    if y:
                        new[j] = row[j] - b * y
                    else:
                        new[j] = row[j]
            else:
                for j in range(ncols):
                    y = prow[j]
                    if y:
                        new[j] = a * row[j] - b * y
                    else:
                        new[j] = a * row[j]
            cg = 0
            for j in range(ncols):
                x = new[j]
                if x:
                    cg = gcd(cg, x)
                    if cg == 1:
                        break
            if cg > 1:
                for j in range(ncols):
                    new[j] = new[j] // cg
            rows[i] = new
        pivots.append(c)
        r += 1
    return rows[:r], pivots
