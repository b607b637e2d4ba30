"""Indecomposable decomposition and isomorphism testing.

Summands are split off with generalized eigenspaces of endomorphisms (Fitting
decomposition): for ``phi`` in ``End(M)`` with minimal polynomial
``prod p_i^{k_i}`` over the rationals, ``M = sum ker p_i(phi)^{k_i}`` as
modules. Indecomposability is certified through the radical of ``End(M)``,
which in characteristic zero is the kernel of the trace form ``tr(xy)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import sympy

from .errors import NonSplit
from .linalg import Matrix, Subspace, find_nonsingular, kernel, linear_combination, q, sample_points
from .modules import (
    ModuleMap,
    Representation,
    Submodule,
    direct_sum,
    hom,
    linear_combination_maps,
    submodule_of,
)


@dataclass
class Summand:
    """An indecomposable summand with its split inclusion and projection."""

    module: Representation
    inclusion: ModuleMap
    projection: ModuleMap


def minimal_polynomial(m: Matrix) -> list:
    """Monic minimal polynomial coefficients ``[c_0, ..., c_{d-1}, 1]`` via a Krylov search."""
    n = m.nrows
    powers = [Matrix.identity(n)]
    flat = [powers[0].flatten()]
    while True:
        nxt = powers[-1] @ m
        # express nxt in terms of the previous powers
        a = Matrix.from_columns(flat, n * n)
        target = nxt.flatten()
        from .linalg import solve

        x = solve(a, Matrix([[t] for t in target], n * n, 1))
        if x is not None:
            return [q(-x[i, 0]) for i in range(len(flat))] + [1]
        powers.append(nxt)
        flat.append(nxt.flatten())


def _poly_at(coeffs: Sequence, m: Matrix) -> Matrix:
    """``sum c_i m^i`` by Horner's rule."""
    n = m.nrows
    acc = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for c in reversed(coeffs):
        acc = acc @ m
        if c:
            acc = acc + ident.scale(c)
    return acc


def _factor(coeffs: Sequence) -> list:
    """Irreducible factorization over Q: list of (coefficient list ascending, multiplicity)."""
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(str(Fraction(c))) for c in reversed(coeffs)], x, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for f, k in factors:
        cs = [q(Fraction(int(c.p), int(c.q))) for c in reversed(f.all_coeffs())]
        out.append((cs, k))
    out.sort(key=lambda t: (len(t[0]), [str(c) for c in t[0]]))
    return out


def endomorphism_radical_dim(basis: Sequence[ModuleMap]) -> tuple:
    """``(dim End, dim rad End)`` from the trace form on total matrices."""
    mats = [f.total() for f in basis]
    k = len(mats)
    if k == 0:
        return 0, 0
    gram = Matrix([[ (mats[i] @ mats[j]).trace() for j in range(k)] for i in range(k)], k, k)
    return k, kernel(gram).dim


def is_indecomposable(m: Representation) -> bool:
    """True iff ``End(M)`` is local with residue field Q; raises NonSplit for a larger division ring."""
    if m.total_dim == 0:
        return False
    k, r = endomorphism_radical_dim(hom(m, m))
    if k - r == 1:
        return True
    if _find_splitting(m, hom(m, m)) is None:
        raise NonSplit(f"End/rad has dimension {k - r} but no rational splitting was found")
    return False


def _find_splitting(m: Representation, basis: Sequence[ModuleMap]) -> Optional[list]:
    """Subspace decomposition of the total space from some endomorphism, or None."""
    mats = [f.total() for f in basis]
    candidates = list(mats)
    if len(mats) > 1:
        for c in sample_points(len(mats), len(mats) + 6)[len(mats):]:
            candidates.append(linear_combination(c, mats))
    for phi in candidates:
        mp = minimal_polynomial(phi)
        factors = _factor(mp)
        if len(factors) < 2:
            continue
        pieces = []
        for cs, k in factors:
            pk = _poly_at(cs, phi).power(k)
            pieces.append(kernel(pk))
        return pieces
    return None


def _submodule_from_total(m: Representation, space: Subspace) -> Submodule:
    spaces = {}
    for v in m.algebra.vertices:
        o, d = m.offsets[v], m.dims[v]
        # the pieces are generalized eigenspaces of a block-diagonal map, so they split by vertex
        spaces[v] = Subspace(d, [x[o:o + d] for x in space.basis])
    return Submodule(m, spaces)


def decompose_full(m: Representation) -> list:
    """Indecomposable summands of ``M`` with inclusion and projection maps.

    Raises:
        NonSplit: ``End(M)/rad`` has a factor that is not split over Q.
    """
    if m.total_dim == 0:
        return []
    basis = hom(m, m)
    k, r = endomorphism_radical_dim(basis)
    if k - r == 1:
        from .modules import identity_map

        ident = identity_map(m)
        return [Summand(m, ident, ident)]
    pieces = _find_splitting(m, basis)
    if pieces is None:
        raise NonSplit(f"End/rad has dimension {k - r} but no rational splitting was found")
    out = []
    for space in pieces:
        sm, inc = submodule_of(m, _submodule_from_total(m, space))
        for s in decompose_full(sm):
            out.append(Summand(s.module, inc @ s.inclusion, None))
    _attach_projections(m, out)
    return out


def _attach_projections(m: Representation, summands: list) -> None:
    """Projections from the inverse of the block matrix of all inclusions."""
    for v in m.algebra.vertices:
        cols = []
        for s in summands:
            b = s.inclusion.blocks[v]
            cols.extend(b.column(j) for j in range(b.ncols))
        if not cols:
            for s in summands:
                s.projection = s.projection or {}
                s.projection[v] = Matrix.zeros(s.module.dims[v], m.dims[v])
            continue
        inv = Matrix.from_columns(cols, m.dims[v]).inverse()
        row = 0
        for s in summands:
            d = s.module.dims[v]
            block = inv.submatrix(range(row, row + d), range(m.dims[v]))
            row += d
            if s.projection is None:
                s.projection = {}
            s.projection[v] = block
    for s in summands:
        s.projection = ModuleMap(m, s.module, s.projection)


def indecomposable_iso(x: Representation, y: Representation) -> Optional[ModuleMap]:
    """Certified isomorphism test for indecomposable ``x`` and ``y``.

    ``x`` and ``y`` are isomorphic iff some composite ``g o f`` of basis maps
    ``f: x -> y``, ``g: y -> x`` is not nilpotent; then ``f`` is an isomorphism.
    """
    if x.dims != y.dims:
        return None
    fs = hom(x, y)
    if not fs:
        return None
    gs = hom(y, x)
    n = x.total_dim
    for f in fs:
        for g in gs:
            c = (g @ f).total()
            if not c.power(n).is_zero():
                return f
    return None


def module_iso(m: Representation, n: Representation) -> Optional[ModuleMap]:
    """An isomorphism ``M -> N`` or ``None``.

    Deterministic sample points in ``Hom(M, N)`` are tried first; a negative
    answer is then certified by Krull-Schmidt matching of indecomposable summands.
    """
    if m.dims != n.dims:
        return None
    if m.total_dim == 0:
        return ModuleMap(m, n, {})
    basis = hom(m, n)
    if not basis:
        return None
    groups = [[f.blocks[v] for f in basis] for v in m.algebra.vertices if m.dims[v]]
    coeffs, _ = find_nonsingular(groups, trials=min(24, 4 + 2 * len(basis)), symbolic_limit=0)
    if coeffs is not None:
        return linear_combination_maps(coeffs, basis)
    return _krull_schmidt_iso(m, n)


def _krull_schmidt_iso(m: Representation, n: Representation) -> Optional[ModuleMap]:
    xs = decompose_full(m)
    ys = decompose_full(n)
    if len(xs) != len(ys):
        return None
    used = set()
    pieces = []
    for x in xs:
        for j, y in enumerate(ys):
            if j in used:
                continue
            f = indecomposable_iso(x.module, y.module)
            if f is not None:
                used.add(j)
                pieces.append(y.inclusion @ f @ x.projection)
                break
        else:
            return None
    total = pieces[0]
    for p in pieces[1:]:
        total = total + p
    return total


def is_isomorphic(m: Representation, n: Representation) -> bool:
    return module_iso(m, n) is not None


def decompose(m: Representation) -> list:
    """Isomorphism classes of indecomposable summands with multiplicities."""
    classes = []
    for s in decompose_full(m):
        for c in classes:
            if indecomposable_iso(c[0], s.module) is not None:
                c[1] += 1
                break
        else:
            classes.append([s.module, 1])
    return [(x, k) for x, k in classes]


def basic_part(m: Representation) -> Representation:
    classes = decompose(m)
    if not classes:
        return m
    return direct_sum([x for x, _ in classes])[0]


def find_in_list(m: Representation, candidates: Sequence[Representation]) -> Optional[int]:
    """Index of the first candidate isomorphic to ``m``."""
    for i, c in enumerate(candidates):
        if module_iso(m, c) is not None:
            return i
    return None
