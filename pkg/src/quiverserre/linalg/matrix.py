"""Exact dense matrices and subspaces over the rationals.

Entries are Python ``int`` or :class:`fractions.Fraction`; integral values are
stored as ``int`` wherever the code normalises them, which keeps the common
0/1 matrices of path algebras cheap.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from . import kernels

Rational = "int | Fraction"


def q(x) -> "int | Fraction":
    """Normalise a rational scalar: integral fractions become ints."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return q(Fraction(x))
    return q(Fraction(x))


def rational_str(x) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is one."""
    return str(Fraction(x))


class Matrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable], nrows: Optional[int] = None,
                 ncols: Optional[int] = None):
        rows = tuple(tuple(q(x) for x in r) for r in rows)
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix without rows")
            ncols = len(rows[0])
        if len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"row length {len(r)} != {ncols}")
        self.rows = rows
        self.nrows = nrows
        self.ncols = ncols
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple, nrows: int, ncols: int) -> "Matrix":
        m = cls.__new__(cls)
        m.rows = rows
        m.nrows = nrows
        m.ncols = ncols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls._raw(tuple((0,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        ncols = len(cols)
        rows = tuple(tuple(q(cols[j][i]) for j in range(ncols)) for i in range(nrows))
        return cls._raw(rows, nrows, ncols)

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nrows, self.ncols, self.rows))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(rational_str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> "Matrix":
        if self.nrows == 0:
            return Matrix.zeros(self.ncols, 0)
        return Matrix._raw(tuple(zip(*self.rows)), self.ncols, self.nrows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix._raw(tuple(tuple(q(a + b) for a, b in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)), self.nrows, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.nrows, self.ncols)

    def scale(self, c) -> "Matrix":
        c = q(c)
        return Matrix._raw(tuple(tuple(q(c * a) for a in r) for r in self.rows), self.nrows, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        n = other.ncols
        orows = other.rows
        out = []
        for r in self.rows:
            acc = [0] * n
            for k, a in enumerate(r):
                if a:
                    ok = orows[k]
                    for j in range(n):
                        b = ok[j]
                        if b:
                            acc[j] += a * b
            out.append(tuple(q(x) for x in acc))
        return Matrix._raw(tuple(out), self.nrows, n)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(q(sum(a * b for a, b in zip(r, v) if a and b)) for r in self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("hstack row mismatch")
        return Matrix._raw(tuple(a + b for a, b in zip(self.rows, other.rows)),
                           self.nrows, self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("vstack column mismatch")
        return Matrix._raw(self.rows + other.rows, self.nrows + other.nrows, self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(tuple(tuple(self.rows[i][j] for j in cols) for i in rows),
                           len(rows), len(cols))

    def flatten(self) -> tuple:
        return tuple(x for r in self.rows for x in r)

    def rank(self) -> int:
        return len(rref(self)[1])

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of non-square matrix")
        x = solve(self, Matrix.identity(n))
        if x is None:
            raise ZeroDivisionError("matrix is singular")
        return x

    def trace(self):
        return q(sum(self.rows[i][i] for i in range(min(self.nrows, self.ncols))))

    def power(self, k: int) -> "Matrix":
        out = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def to_json(self) -> list:
        return [[rational_str(x) for x in r] for r in self.rows]


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    nr = sum(b.nrows for b in blocks)
    nc = sum(b.ncols for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        left = (0,) * off
        right = (0,) * (nc - off - b.ncols)
        for r in b.rows:
            rows.append(left + r + right)
        off += b.ncols
    return Matrix._raw(tuple(rows), nr, nc)


def block_matrix(blocks: Sequence[Sequence[Matrix]], row_sizes: Sequence[int],
                 col_sizes: Sequence[int]) -> Matrix:
    """Assemble a matrix from a grid of blocks (``None`` means zero)."""
    rows = []
    for bi, rs in enumerate(row_sizes):
        for i in range(rs):
            row = []
            for bj, cs in enumerate(col_sizes):
                blk = blocks[bi][bj]
                row.extend(blk.rows[i] if blk is not None else (0,) * cs)
            rows.append(tuple(row))
    return Matrix._raw(tuple(rows), sum(row_sizes), sum(col_sizes))


def _integer_rows(rows: Iterable[Sequence]) -> list:
    out = []
    for r in rows:
        den = 1
        for x in r:
            d = x.denominator
            if d != 1:
                den = lcm(den, d)
        if den == 1:
            out.append([int(x) for x in r])
        else:
            out.append([int(x * den) for x in r])
    return out


def rref_rows(rows: Iterable[Sequence], ncols: int) -> tuple:
    """Reduced row echelon form of a list of rows.

    Returns:
        ``(rows, pivots)``: the nonzero rows of the RREF as tuples of
        rationals, and the strictly increasing pivot columns.
    """
    irows = _integer_rows(rows)
    if not irows or ncols == 0:
        return (), []
    red, pivots = kernels.rref_integer(irows, ncols)
    out = []
    for row, c in zip(red, pivots):
        p = row[c]
        if p == 1:
            out.append(tuple(row))
        else:
            out.append(tuple(q(Fraction(x, p)) if x else 0 for x in row))
    return tuple(out), pivots


def rref(m: Matrix) -> tuple:
    """Reduced row echelon form of ``m`` and its pivot columns."""
    red, pivots = rref_rows(m.rows, m.ncols)
    red = red + tuple((0,) * m.ncols for _ in range(m.nrows - len(red)))
    return Matrix._raw(red, m.nrows, m.ncols), list(pivots)


class Subspace:
    """A subspace of ``Q^n`` stored by its canonical reduced echelon basis.

    Two subspaces are equal exactly when their ``basis`` tuples are equal.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = (), *, _canonical=None):
        self.ambient = ambient
        if _canonical is not None:
            self.basis, self.pivots = _canonical
            return
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        red, piv = rref_rows(vectors, ambient)
        self.basis = red
        self.pivots = tuple(piv)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, _canonical=((), ()))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, _canonical=(tuple(tuple(1 if i == j else 0 for j in range(n))
                                        for i in range(n)), tuple(range(n))))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of ``v`` modulo the subspace (zero iff ``v`` lies in it)."""
        v = list(v)
        for b, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for j, x in enumerate(b):
                    if x:
                        v[j] -= c * x
        return tuple(q(x) for x in v)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coords(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the canonical basis; ``v`` must lie in the subspace."""
        c = tuple(v[p] for p in self.pivots)
        if __debug__ and any(self.reduce(v)):
            raise ValueError("vector not in subspace")
        return c

    def complement_basis(self) -> list:
        """Unit vectors at non-pivot positions; they span a complement."""
        piv = set(self.pivots)
        return [tuple(1 if i == j else 0 for i in range(self.ambient))
                for j in range(self.ambient) if j not in piv]

    def quotient_matrix(self) -> Matrix:
        """Matrix of the projection ``Q^n -> Q^n / S`` in complement coordinates."""
        piv = set(self.pivots)
        free = [j for j in range(self.ambient) if j not in piv]
        rows = []
        for j in free:
            row = [0] * self.ambient
            row[j] = 1
            for b, p in zip(self.basis, self.pivots):
                if b[j]:
                    row[p] = -b[j]
            rows.append(tuple(row))
        return Matrix._raw(tuple(rows), len(free), self.ambient)

    def matrix(self) -> Matrix:
        """Basis vectors as the columns of an ``ambient x dim`` matrix."""
        return Matrix.from_columns(self.basis, self.ambient)

    def __add__(self, other: "Subspace") -> "Subspace":
        return self.sum(other)

    def sum(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        if not other.basis:
            return self
        if not self.basis:
            return other
        return Subspace(self.ambient, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient)
        # x = sum a_i s_i = sum b_j t_j  <=>  (a, b) in ker [S^T | -T^T]
        k1 = len(self.basis)
        cols = list(self.basis) + [tuple(-x for x in t) for t in other.basis]
        ker = kernel(Matrix.from_columns(cols, self.ambient))
        vecs = []
        for v in ker.basis:
            a = v[:k1]
            vecs.append(tuple(q(sum(a[i] * self.basis[i][j] for i in range(k1) if a[i]))
                              for j in range(self.ambient)))
        return Subspace(self.ambient, vecs)

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains(v) for v in self.basis)


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient != b.ambient:
        raise ValueError(f"ambient dimension mismatch: {a.ambient} vs {b.ambient}")


def kernel(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}``."""
    n = m.ncols
    red, pivots = rref_rows(m.rows, n)
    pset = set(pivots)
    vecs = []
    for f in range(n):
        if f in pset:
            continue
        v = [0] * n
        v[f] = 1
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        vecs.append(v)
    # already reduced up to row order; canonicalise anyway
    return Subspace(n, vecs)


def image(m: Matrix, s: Optional[Subspace] = None) -> Subspace:
    """``m(s)``; the column space of ``m`` when ``s`` is omitted."""
    if s is None:
        return Subspace(m.nrows, m.T.rows)
    if s.ambient != m.ncols:
        raise ValueError("image: dimension mismatch")
    return Subspace(m.nrows, [m.apply(v) for v in s.basis])


def solve(m: Matrix, rhs: Matrix) -> Optional[Matrix]:
    """Some ``x`` with ``m x = rhs`` (free variables zero), or ``None``."""
    if rhs.nrows != m.nrows:
        raise ValueError(f"solve: {m.nrows} equations but rhs has {rhs.nrows} rows")
    n = m.ncols
    k = rhs.ncols
    aug = [r + s for r, s in zip(m.rows, rhs.rows)]
    red, pivots = rref_rows(aug, n + k)
    if pivots and pivots[-1] >= n:
        return None
    x = [[0] * k for _ in range(n)]
    for row, p in zip(red, pivots):
        for j in range(k):
            x[p][j] = row[n + j]
    return Matrix(x, n, k)


def linear_combination(coeffs: Sequence, mats: Sequence[Matrix]) -> Matrix:
    nr, nc = mats[0].shape
    acc = [[0] * nc for _ in range(nr)]
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        for i, r in enumerate(m.rows):
            ai = acc[i]
            for j, x in enumerate(r):
                if x:
                    ai[j] += c * x
    return Matrix._raw(tuple(tuple(q(x) for x in r) for r in acc), nr, nc)


def sample_points(k: int, count: int, seed: int = 0) -> list:
    """Deterministic integer parameter points: unit vectors, all-ones, then seeded draws."""
    pts = []
    for i in range(k):
        pts.append(tuple(1 if j == i else 0 for j in range(k)))
    pts.append(tuple(1 for _ in range(k)))
    pts.append(tuple(j + 1 for j in range(k)))
    rng = random.Random(seed)
    bound = max(8, 4 * k)
    while len(pts) < count:
        pts.append(tuple(rng.randint(-bound, bound) for _ in range(k)))
    return pts[:max(count, 0)]


def find_nonsingular(groups: Sequence[Sequence[Matrix]], *, trials: Optional[int] = None,
                     symbolic_limit: int = 12) -> tuple:
    """Find coefficients ``c`` making every ``sum_i c_i groups[g][i]`` invertible.

    All groups share the coefficient vector (they are blocks of one linear
    family). Deterministic points are tried first; if none works and every
    block is at most ``symbolic_limit`` wide, the product of block
    determinants is expanded symbolically, which certifies a negative answer.

    Returns:
        ``(coeffs or None, certified)``; ``certified`` is False only when the
        search gave up without a symbolic proof.
    """
    if not groups:
        return (), True
    k = len(groups[0])
    for g in groups:
        if g and g[0].nrows != g[0].ncols:
            return None, True
    if k == 0:
        ok = all(g[0].nrows == 0 for g in groups if g) if groups[0] else False
        return ((), True) if ok else (None, True)
    width = max(g[0].nrows for g in groups)
    if trials is None:
        trials = min(400, 8 + 4 * width * k)
    for c in sample_points(k, trials):
        if all(linear_combination(c, g).is_invertible() for g in groups):
            return c, True
    if width > symbolic_limit:
        return None, False
    import sympy

    syms = sympy.symbols(f"c0:{k}")
    for g in groups:
        n = g[0].nrows
        if n == 0:
            continue
        ent = [[sum((sympy.Rational(str(Fraction(g[i].rows[r][s]))) * syms[i]
                     for i in range(k) if g[i].rows[r][s]), sympy.Integer(0))
                for s in range(n)] for r in range(n)]
        det = sympy.Matrix(ent).det(method="berkowitz")
        if sympy.expand(det) == 0:
            return None, True
    # every determinant is a nonzero polynomial, hence so is their product;
    # a grid with more values than its degree in each variable has a non-root
    span = width * len(groups) + 1
    rng = range(-span, span + 1)
    for c in sample_points(k, 2000, seed=1):
        if all(linear_combination(c, g).is_invertible() for g in groups):
            return c, True
    import itertools

    for c in itertools.product(rng, repeat=k):
        if all(linear_combination(c, g).is_invertible() for g in groups):
            return c, True
    return None, True  # pragma: no cover - unreachable by the grid argument
