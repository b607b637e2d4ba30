"""Bounded complexes and the Serre-duality dimension checks in the derived category.

Indexing is homological: ``d_n: C_n -> C_{n-1}``. The shift ``C[k]`` has
``C[k]_n = C_{n-k}`` and differential ``(-1)^k d``, so for modules ``M, N``
``Hom_D(M, N[n]) = Ext^n(M, N)``. Hom spaces in ``D^b`` are computed by
resolving the source by projectives and taking homology of the total Hom
complex, whose differential follows the Koszul sign rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

from .algebra import BoundQuiverAlgebra
from .errors import CapExceeded, PreconditionFailed
from .linalg import Matrix, Subspace, kernel
from .modules import (
    ModuleMap,
    Representation,
    direct_sum,
    ext_dim,
    hom_space,
    map_image,
    map_kernel,
    projective,
    projective_cover,
    quotient,
    solve_lift,
    submodule_of,
    zero_map,
)


@dataclass
class BoundedComplex:
    """Objects and differentials ``d_n: C_n -> C_{n-1}``; zero outside the stored degrees.

    Attributes:
        labels: for degreewise projective complexes built here, degree -> the
            labels of the indecomposable summands, in the order of the sum.
    """

    algebra: BoundQuiverAlgebra
    objects: dict
    differentials: dict = field(default_factory=dict)
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        self.objects = {n: m for n, m in self.objects.items() if not m.is_zero()}
        for n in list(self.differentials):
            if n not in self.objects or n - 1 not in self.objects:
                del self.differentials[n]

    @property
    def lo(self) -> Optional[int]:
        return min(self.objects) if self.objects else None

    @property
    def hi(self) -> Optional[int]:
        return max(self.objects) if self.objects else None

    def obj(self, n: int) -> Representation:
        m = self.objects.get(n)
        return m if m is not None else Representation(self.algebra, {}, check=False)

    def d(self, n: int) -> ModuleMap:
        f = self.differentials.get(n)
        return f if f is not None else zero_map(self.obj(n), self.obj(n - 1))

    def is_complex(self) -> bool:
        if not self.objects:
            return True
        return all((self.d(n - 1) @ self.d(n)).is_zero() for n in range(self.lo + 1, self.hi + 1))

    def homology(self, n: int) -> Representation:
        z = map_kernel(self.d(n))
        b = map_image(self.d(n + 1))
        zm, inc = submodule_of(self.obj(n), z)
        # image of d_{n+1} inside Z_n
        from .modules import Submodule

        spaces = {}
        for v in self.algebra.vertices:
            ib = inc.blocks[v]
            vecs = [_coords_in_columns(ib, x) for x in b.spaces[v].basis]
            spaces[v] = Subspace(zm.dims[v], vecs)
        return quotient(zm, Submodule(zm, spaces))[0]

    def homology_dims(self) -> dict:
        if not self.objects:
            return {}
        out = {}
        for n in range(self.lo, self.hi + 1):
            h = self.homology(n)
            if not h.is_zero():
                out[n] = h.dim_vector()
        return out


def _coords_in_columns(m: Matrix, x: Sequence) -> tuple:
    from .linalg import solve

    sol = solve(m, Matrix([[t] for t in x], len(x), 1))
    if sol is None:  # pragma: no cover - boundaries are cycles
        raise AssertionError("vector outside the column space")
    return tuple(sol[i, 0] for i in range(m.ncols))


@dataclass
class ChainMap:
    source: BoundedComplex
    target: BoundedComplex
    components: dict  # degree -> ModuleMap

    def component(self, n: int) -> ModuleMap:
        f = self.components.get(n)
        return f if f is not None else zero_map(self.source.obj(n), self.target.obj(n))

    def commutes(self) -> bool:
        degrees = set(self.source.objects) | set(self.target.objects)
        for n in degrees:
            lhs = self.target.d(n) @ self.component(n)
            rhs = self.component(n - 1) @ self.source.d(n)
            if (lhs - rhs).flatten() != tuple(0 for _ in lhs.flatten()):
                return False
        return True


def stalk(m: Representation, degree: int = 0) -> BoundedComplex:
    return BoundedComplex(m.algebra, {degree: m})


def shift(c: BoundedComplex, k: int) -> BoundedComplex:
    """``C[k]``: ``C[k]_n = C_{n-k}`` with differential ``(-1)^k d``."""
    sign = -1 if k % 2 else 1
    objs = {n + k: m for n, m in c.objects.items()}
    diffs = {n + k: f.scale(sign) for n, f in c.differentials.items()}
    labels = {n + k: lab for n, lab in c.labels.items()}
    return BoundedComplex(c.algebra, objs, diffs, labels)


def projective_resolution_complex(c: BoundedComplex, cap: int = 20) -> tuple:
    """Degreewise projective ``P`` with a quasi-isomorphism ``P -> C``.

    Built from the lowest degree up: at degree ``n`` the cycles ``Z`` of the
    mapping cone in degree ``n`` are covered modulo the boundaries coming from
    ``C_{n+1}`` by a projective cover, which adds ``P_n`` and makes the cone
    exact at ``n``. The construction stops once the cone cycles vanish above
    the top of ``C``.

    Returns:
        ``(P, chain map P -> C)``.

    Raises:
        CapExceeded: the cone is still not exact ``cap`` degrees above the top of ``C``.
    """
    alg = c.algebra
    if not c.objects:
        return c, ChainMap(c, c, {})
    p_obj, p_d, p_lab, f = {}, {}, {}, {}
    n = c.lo
    empty = Representation(alg, {}, check=False)
    while True:
        if n > c.hi + cap:
            raise CapExceeded(f"projective resolution longer than cap {cap}")
        prev = p_obj.get(n - 1, empty)
        cn = c.obj(n)
        # cone_n = P_{n-1} + C_n, d(y, x) = (-d y, f y + d x)
        cone, incs, projs = direct_sum([prev, cn], alg)
        prev2 = p_obj.get(n - 2, empty)
        cn1 = c.obj(n - 1)
        cone_lo, incs_lo, _ = direct_sum([prev2, cn1], alg)
        dp = p_d.get(n - 1, zero_map(prev, prev2))
        fp = f.get(n - 1, zero_map(prev, cn1))
        dc = c.d(n)
        dcone = (incs_lo[0] @ dp.scale(-1) + incs_lo[1] @ fp) @ projs[0] + incs_lo[1] @ dc @ projs[1]
        z_sub = map_kernel(dcone)
        if n > c.hi and z_sub.total_dim == 0:
            break
        z, z_inc = submodule_of(cone, z_sub)
        b_map = incs[1] @ c.d(n + 1)  # C_{n+1} -> cone_n, lands in Z
        from .serre import _restrict

        b_in_z = _restrict(b_map, z_inc, c.obj(n + 1))
        zq, to_zq = quotient(z, map_image(b_in_z))
        if zq.is_zero():
            p_obj[n] = empty
            p_lab[n] = []
        else:
            pn, cover, labels = projective_cover(zq)
            g = solve_lift(cover, to_zq)
            if g is None:  # pragma: no cover
                raise AssertionError("projective cover does not lift")
            g = z_inc @ g
            p_obj[n] = pn
            p_lab[n] = labels
            p_d[n] = (projs[0] @ g).scale(-1)
            f[n] = projs[1] @ g
        n += 1
    res = BoundedComplex(alg, p_obj, p_d, {k: v for k, v in p_lab.items() if v})
    chain = ChainMap(res, c, {k: v for k, v in f.items() if k in res.objects})
    return res, chain


def is_quasi_isomorphism(chain: ChainMap) -> bool:
    """Homology dimension vectors agree in every degree and the map commutes with ``d``."""
    return chain.commutes() and chain.source.homology_dims() == chain.target.homology_dims()


def resolution_of(m: Representation, cap: int = 20) -> BoundedComplex:
    return projective_resolution_complex(stalk(m, 0), cap)[0]


def _hom_total_degree(cp: BoundedComplex, d: BoundedComplex, k: int) -> list:
    """Summands of ``Hom_k = prod_p Hom(C_p, D_{p+k})`` as ``(p, space, basis)``."""
    out = []
    for p in sorted(cp.objects):
        if p + k in d.objects:
            sp, basis = hom_space(cp.obj(p), d.obj(p + k))
            if sp.dim:
                out.append((p, sp, basis))
    return out


def _hom_differential(cp: BoundedComplex, d: BoundedComplex, k: int) -> Matrix:
    """``Hom_k -> Hom_{k-1}``, ``f -> d_D f - (-1)^k f d_C``."""
    src = _hom_total_degree(cp, d, k)
    tgt = _hom_total_degree(cp, d, k - 1)
    offs, total = {}, 0
    for p, sp, _ in tgt:
        offs[p] = total
        total += sp.dim
    sign = -1 if k % 2 else 1
    cols = []
    for p, sp, basis in src:
        for f in basis:
            col = [0] * total
            # component C_p -> D_{p+k-1}
            if p in offs:
                g = d.d(p + k) @ f
                tsp = next(t for t in tgt if t[0] == p)[1]
                for i, x in enumerate(tsp.coords(g.flatten())):
                    col[offs[p] + i] += x
            # component C_{p+1} -> D_{p+k}
            if p + 1 in offs:
                g = f @ cp.d(p + 1)
                tsp = next(t for t in tgt if t[0] == p + 1)[1]
                for i, x in enumerate(tsp.coords(g.flatten())):
                    col[offs[p + 1] + i] -= sign * x
            cols.append(col)
    return Matrix.from_columns(cols, total) if cols else Matrix.zeros(total, 0)


def hom_homotopy(cp: BoundedComplex, d: BoundedComplex, n: int) -> int:
    """``dim Hom_K(Cp, D[n])``: ``H_{-n}`` of the total Hom complex."""
    k = -n
    dim_k = sum(sp.dim for _, sp, _ in _hom_total_degree(cp, d, k))
    if dim_k == 0:
        return 0
    out = _hom_differential(cp, d, k)
    cycles = dim_k - (out.rank() if out.nrows and out.ncols else 0)
    inc = _hom_differential(cp, d, k + 1)
    bounds = inc.rank() if inc.nrows and inc.ncols else 0
    return cycles - bounds


def hom_derived(x: BoundedComplex, y: BoundedComplex, n: int, cap: int = 20) -> int:
    """``dim Hom_D(X, Y[n])`` through a projective resolution of ``X``."""
    return hom_homotopy(projective_resolution_complex(x, cap)[0], y, n)


def _projective_summands(alg: BoundQuiverAlgebra, labels: Sequence[str]) -> tuple:
    return direct_sum([projective(alg, v) for v in labels], alg)


def apply_functor_complex(functor: Union[str, Callable, object], cp: BoundedComplex) -> BoundedComplex:
    """Apply a functor degreewise to a complex of projectives.

    Args:
        functor: ``"nakayama"``, ``"identity"``, or a ``ProjFunctorTable``,
            which is extended to sums of indecomposable projectives by
            additivity (needs ``cp.labels``).
    """
    from .serre import ProjFunctorTable, nakayama, nakayama_map

    if functor == "identity":
        return cp
    if functor == "nakayama":
        objs = {n: nakayama(m) for n, m in cp.objects.items()}
        diffs = {}
        for n, g in cp.differentials.items():
            h = nakayama_map(g)
            diffs[n] = ModuleMap(objs[n], objs[n - 1], h.blocks)
        return BoundedComplex(cp.algebra, objs, diffs)
    if not isinstance(functor, ProjFunctorTable):
        raise TypeError("functor must be 'nakayama', 'identity' or a ProjFunctorTable")
    table = functor
    alg = cp.algebra
    objs, sums = {}, {}
    for n in cp.objects:
        labels = cp.labels.get(n)
        if labels is None:
            raise ValueError("table functors need the summand labels of each degree")
        sums[n] = _projective_summands(alg, labels)
        objs[n] = direct_sum([table.objects[v] for v in labels], alg)
    diffs = {}
    for n, g in cp.differentials.items():
        src_l, tgt_l = cp.labels[n], cp.labels[n - 1]
        _, s_incs, _ = sums[n]
        _, _, t_projs = sums[n - 1]
        fs, f_incs, _ = objs[n]
        ft, _, f_projs = objs[n - 1]
        total = zero_map(fs, ft)
        ft_incs = objs[n - 1][1]
        for i, lam in enumerate(src_l):
            for j, mu in enumerate(tgt_l):
                comp = t_projs[j] @ g @ s_incs[i]
                if comp.is_zero():
                    continue
                image = _table_image(table, lam, mu, comp)
                total = total + ft_incs[j] @ image @ objs[n][2][i]
        diffs[n] = total
    return BoundedComplex(alg, {n: o[0] for n, o in objs.items()}, diffs)


def _table_image(table, lam: str, mu: str, comp: ModuleMap) -> ModuleMap:
    from .serre import _coords_in

    pairs = table.maps[(lam, mu)]
    coords = _coords_in(pairs, comp)
    out = zero_map(table.objects[lam], table.objects[mu])
    for c, (_, ff) in zip(coords, pairs):
        if c:
            out = out + ff.scale(c)
    return out


def derived_nakayama(x: BoundedComplex, cap: int = 20) -> BoundedComplex:
    """``L H (X)``: the Nakayama functor applied to a projective resolution."""
    return apply_functor_complex("nakayama", projective_resolution_complex(x, cap)[0])


def serre_duality_check(alg: BoundQuiverAlgebra, m: Representation, n: Representation,
                        degrees: Sequence[int], cap: int = 20) -> list:
    """Rows ``(n, lhs, rhs, equal)`` comparing ``Hom_D(M, LH(N)[n])`` with ``Hom_D(N, M[-n])``.

    The second quantity is ``dim Ext^{-n}(N, M)``, the dual side of the
    pairing ``Hom(X, S Y) = Hom(Y, X)^*`` with ``X = M`` and ``Y = N[n]``.

    Raises:
        PreconditionFailed: infinite global dimension within ``cap``.
    """
    from .predicates import Exceeded, global_dimension

    gd = global_dimension(alg, cap)
    if isinstance(gd, Exceeded):
        raise PreconditionFailed("finiteGlobalDimension", f"resolution still nonzero at cap {cap}")
    res_m = projective_resolution_complex(stalk(m, 0), cap)[0]
    lh_n = derived_nakayama(stalk(n, 0), cap)
    rows = []
    for k in degrees:
        lhs = hom_homotopy(res_m, lh_n, k)
        rhs = ext_dim(n, m, -k, cap) if k <= 0 else 0
        rows.append((k, lhs, rhs, lhs == rhs))
    return rows


def ext_consistency(m: Representation, n: Representation, max_degree: int = 4, cap: int = 20) -> list:
    """Rows ``(k, hom_homotopy, ext_dim)`` for ``k = 0 .. max_degree``."""
    res = projective_resolution_complex(stalk(m, 0), cap)[0]
    target = stalk(n, 0)
    return [(k, hom_homotopy(res, target, k), ext_dim(m, n, k, cap)) for k in range(max_degree + 1)]
