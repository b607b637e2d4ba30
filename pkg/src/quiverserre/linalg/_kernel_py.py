"""Pure-Python fraction-free Gauss-Jordan elimination on integer rows.

This is the reference implementation of the hot kernel; ``_kernel.pyx`` is a
line-for-line typed port of it and must stay behaviourally identical.
"""

from math import gcd


def rref_integer(rows, ncols):
    """Reduce integer rows in place to a scaled reduced echelon form.

    Each output row has a positive pivot, zeros in every other pivot column
    and content (gcd of entries) equal to one. Dividing a row by its pivot
    gives the usual reduced row echelon form.

    Args:
        rows: list of lists of ``int``; consumed and reused.
        ncols: number of columns.

    Returns:
        ``(rows, pivots)`` with ``len(rows) == len(pivots)`` (zero rows dropped).
    """
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        best = 0
        for i in range(r, nrows):
            v = rows[i][c]
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
        prow = rows[r]
        p = prow[c]
        if p < 0:
            prow = [-x for x in prow]
            rows[r] = prow
            p = -p
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            g = gcd(p, f)
            a = p // g
            b = f // g
            if a == 1:
                new = [x - b * y if y else x for x, y in zip(row, prow)]
            else:
                new = [a * x - b * y for x, y in zip(row, prow)]
            cg = 0
            for x in new:
                if x:
                    cg = gcd(cg, x)
                    if cg == 1:
                        break
            if cg > 1:
                new = [x // cg for x in new]
            rows[i] = new
        pivots.append(c)
        r += 1
    return rows[:r], pivots
