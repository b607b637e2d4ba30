"""Finite-dimensional left modules as quiver representations.

A representation ``M`` assigns a vector space ``M_v = Q^{dims[v]}`` to each
vertex and a matrix of shape ``dims[t] x dims[s]`` to each arrow ``s -> t``.
A path acts by the product of its arrow matrices in reverse traversal order.
Elements of the total space are concatenations of vertex components in the
algebra's vertex order.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .algebra import BoundQuiverAlgebra, opposite
from .errors import DimensionMismatch
from .linalg import Matrix, Subspace, block_diagonal, image, kernel, q, solve


def same_algebra(a: BoundQuiverAlgebra, b: BoundQuiverAlgebra) -> bool:
    return a is b or a == b


class Representation:
    """A representation of the bound quiver of ``algebra``.

    Args:
        algebra: the algebra.
        dims: vertex label -> dimension (missing vertices are zero).
        action: arrow name -> matrix; missing arrows act by zero.
        check: verify shapes and that every relation acts by zero.
    """

    def __init__(self, algebra: BoundQuiverAlgebra, dims: dict, action: Optional[dict] = None,
                 check: bool = True):
        self.algebra = algebra
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        action = dict(action or {})
        self.action = {}
        for a in algebra.quiver.arrows:
            m = action.pop(a.name, None)
            if m is None:
                m = Matrix.zeros(self.dims[a.target], self.dims[a.source])
            elif not isinstance(m, Matrix):
                m = Matrix(m, self.dims[a.target], self.dims[a.source])
            self.action[a.name] = m
        if action:
            raise DimensionMismatch(f"unknown arrows {sorted(action)}")
        self.offsets = {}
        off = 0
        for v in algebra.vertices:
            self.offsets[v] = off
            off += self.dims[v]
        self.total_dim = off
        if check:
            self.validate()

    def validate(self) -> None:
        for a in self.algebra.quiver.arrows:
            m = self.action[a.name]
            if m.shape != (self.dims[a.target], self.dims[a.source]):
                raise DimensionMismatch(
                    f"arrow {a.name}: matrix shape {m.shape}, expected "
                    f"{(self.dims[a.target], self.dims[a.source])}")
        for r in self.algebra.relations:
            acc = None
            for c, p in r.terms:
                term = self.path_matrix(p).scale(c)
                acc = term if acc is None else acc + term
            if acc is not None and not acc.is_zero():
                raise DimensionMismatch(f"relation {r.terms} does not act by zero")

    def path_matrix(self, arrows: Sequence[str]) -> Matrix:
        """Action of a nonempty path ``arrows`` (traversal order)."""
        out = None
        for name in arrows:
            m = self.action[name]
            out = m if out is None else m @ out
        return out

    def basis_path_matrix(self, i: int) -> Matrix:
        """Action of the algebra basis element ``i`` as a map ``M_source -> M_target``."""
        p = self.algebra.basis[i]
        if not p.arrows:
            return Matrix.identity(self.dims[p.source])
        return self.path_matrix(p.arrows)

    def element_matrix(self, x: Sequence) -> Matrix:
        """Total-space matrix of the action of an algebra element ``x``."""
        n = self.total_dim
        rows = [[0] * n for _ in range(n)]
        for i, c in enumerate(x):
            if not c:
                continue
            p = self.algebra.basis[i]
            m = self.basis_path_matrix(i)
            ro, co = self.offsets[p.target], self.offsets[p.source]
            for r, row in enumerate(m.rows):
                for s, val in enumerate(row):
                    if val:
                        rows[ro + r][co + s] += c * val
        return Matrix(rows, n, n)

    def vertex_of(self, k: int) -> tuple:
        """Vertex and local index of total coordinate ``k``."""
        for v in self.algebra.vertices:
            if k < self.offsets[v] + self.dims[v]:
                return v, k - self.offsets[v]
        raise IndexError(k)

    def split(self, vec: Sequence) -> dict:
        return {v: tuple(vec[self.offsets[v]:self.offsets[v] + self.dims[v]])
                for v in self.algebra.vertices}

    def join(self, parts: dict) -> tuple:
        out = []
        for v in self.algebra.vertices:
            out.extend(parts.get(v, (0,) * self.dims[v]))
        return tuple(out)

    def dim_vector(self) -> tuple:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (same_algebra(self.algebra, other.algebra) and self.dims == other.dims
                and self.action == other.action)

    def __hash__(self) -> int:
        return hash((self.dim_vector(), tuple(self.action[a.name] for a in self.algebra.quiver.arrows)))

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims})"

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.content_hash(),
            "dims": dict(self.dims),
            "arrows": {k: m.to_json() for k, m in self.action.items()},
        }


class ModuleMap:
    """A homomorphism of representations given by one matrix per vertex."""

    def __init__(self, source: Representation, target: Representation, blocks: dict, check: bool = False):
        self.source = source
        self.target = target
        self.blocks = {}
        for v in source.algebra.vertices:
            b = blocks.get(v)
            if b is None:
                b = Matrix.zeros(target.dims[v], source.dims[v])
            self.blocks[v] = b
        if check and not self.is_homomorphism():
            raise DimensionMismatch("blocks do not intertwine the arrow actions")

    def is_homomorphism(self) -> bool:
        for a in self.source.algebra.quiver.arrows:
            if (self.target.action[a.name] @ self.blocks[a.source]
                    != self.blocks[a.target] @ self.source.action[a.name]):
                return False
        return True

    def total(self) -> Matrix:
        return block_diagonal([self.blocks[v] for v in self.source.algebra.vertices])

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        """Composition ``self o other``."""
        return ModuleMap(other.source, self.target,
                         {v: self.blocks[v] @ other.blocks[v] for v in self.blocks})

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, {v: self.blocks[v] + other.blocks[v] for v in self.blocks})

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, {v: self.blocks[v] - other.blocks[v] for v in self.blocks})

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(self.source, self.target, {v: b.scale(c) for v, b in self.blocks.items()})

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks.values())

    def is_iso(self) -> bool:
        return all(b.is_invertible() for b in self.blocks.values())

    def inverse(self) -> "ModuleMap":
        return ModuleMap(self.target, self.source, {v: b.inverse() for v, b in self.blocks.items()})

    def apply(self, vec: Sequence) -> tuple:
        parts = self.source.split(vec)
        return self.target.join({v: self.blocks[v].apply(parts[v]) for v in parts})

    def flatten(self) -> tuple:
        return tuple(x for v in self.source.algebra.vertices for x in self.blocks[v].flatten())

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleMap) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(tuple(self.blocks[v] for v in sorted(self.blocks)))

    def __repr__(self) -> str:
        return f"ModuleMap({self.source.dims} -> {self.target.dims})"


def identity_map(m: Representation) -> ModuleMap:
    return ModuleMap(m, m, {v: Matrix.identity(d) for v, d in m.dims.items()})


def zero_map(m: Representation, n: Representation) -> ModuleMap:
    return ModuleMap(m, n, {})


def linear_combination_maps(coeffs: Sequence, maps: Sequence[ModuleMap]) -> ModuleMap:
    src, tgt = maps[0].source, maps[0].target
    blocks = {}
    for v in src.algebra.vertices:
        acc = Matrix.zeros(tgt.dims[v], src.dims[v])
        for c, f in zip(coeffs, maps):
            if c:
                acc = acc + f.blocks[v].scale(c)
        blocks[v] = acc
    return ModuleMap(src, tgt, blocks)


class Submodule:
    """A subrepresentation given by one canonical subspace per vertex."""

    def __init__(self, parent: Representation, spaces: dict):
        self.parent = parent
        self.spaces = {v: spaces.get(v) or Subspace.zero(parent.dims[v]) for v in parent.algebra.vertices}

    @property
    def dims(self) -> dict:
        return {v: s.dim for v, s in self.spaces.items()}

    @property
    def total_dim(self) -> int:
        return sum(s.dim for s in self.spaces.values())

    def is_closed(self) -> bool:
        for a in self.parent.algebra.quiver.arrows:
            m = self.parent.action[a.name]
            tgt = self.spaces[a.target]
            if not all(tgt.contains(m.apply(b)) for b in self.spaces[a.source].basis):
                return False
        return True

    def __add__(self, other: "Submodule") -> "Submodule":
        return Submodule(self.parent, {v: self.spaces[v] + other.spaces[v] for v in self.spaces})

    def intersection(self, other: "Submodule") -> "Submodule":
        return Submodule(self.parent, {v: self.spaces[v].intersection(other.spaces[v]) for v in self.spaces})

    def contains(self, other: "Submodule") -> bool:
        return all(other.spaces[v].is_subspace_of(self.spaces[v]) for v in self.spaces)

    def __eq__(self, other) -> bool:
        return isinstance(other, Submodule) and self.spaces == other.spaces

    def __hash__(self) -> int:
        return hash(tuple(self.spaces[v] for v in sorted(self.spaces)))

    def __repr__(self) -> str:
        return f"Submodule(dims={self.dims})"

    @classmethod
    def zero(cls, m: Representation) -> "Submodule":
        return cls(m, {})

    @classmethod
    def whole(cls, m: Representation) -> "Submodule":
        return cls(m, {v: Subspace.full(d) for v, d in m.dims.items()})


def generated_submodule(m: Representation, gens: dict) -> Submodule:
    """Smallest submodule containing the vectors ``gens[v]`` at each vertex ``v``."""
    arrows_out = {v: m.algebra.quiver.out_arrows(v) for v in m.algebra.vertices}
    spaces = {v: Subspace.zero(m.dims[v]) for v in m.algebra.vertices}
    todo = [(v, tuple(x)) for v, vecs in gens.items() for x in vecs]
    while todo:
        batch = {}
        for v, x in todo:
            batch.setdefault(v, []).append(x)
        todo = []
        for v, vecs in batch.items():
            old = spaces[v]
            new = Subspace(m.dims[v], list(old.basis) + vecs)
            if new.dim == old.dim:
                continue
            spaces[v] = new
            fresh = [x for x in new.basis if not old.contains(x)] if old.dim else list(new.basis)
            for a in arrows_out[v]:
                mat = m.action[a.name]
                for x in fresh:
                    y = mat.apply(x)
                    if any(y):
                        todo.append((a.target, y))
    return Submodule(m, spaces)


# -- constructions ------------------------------------------------------


def projective(alg: BoundQuiverAlgebra, lam: str) -> Representation:
    """``P(lam) = A e_lam``: basis the basis paths starting at ``lam``, arrows act on the right."""
    paths = {v: alg.paths_between(lam, v) for v in alg.vertices}
    pos = {v: {i: k for k, i in enumerate(paths[v])} for v in alg.vertices}
    action = {}
    for a in alg.quiver.arrows:
        ai = alg.index[_arrow_path(alg, a.name)]
        rows = [[0] * len(paths[a.source]) for _ in paths[a.target]]
        for col, i in enumerate(paths[a.source]):
            for k, c in alg.product(i, ai).items():
                rows[pos[a.target][k]][col] += c
        action[a.name] = Matrix(rows, len(paths[a.target]), len(paths[a.source]))
    m = Representation(alg, {v: len(paths[v]) for v in alg.vertices}, action, check=False)
    m.basis_paths = paths
    return m


def _arrow_path(alg: BoundQuiverAlgebra, name: str):
    a = alg.quiver.arrow(name)
    from .algebra import Path

    return Path(a.source, a.target, (name,))


def projective_generator(alg: BoundQuiverAlgebra, lam: str) -> tuple:
    """The element ``e_lam`` of ``P(lam)`` in total coordinates."""
    p = projective(alg, lam)
    vec = [0] * p.total_dim
    vec[p.offsets[lam] + p.basis_paths[lam].index(alg.e[lam])] = 1
    return tuple(vec)


def simple(alg: BoundQuiverAlgebra, lam: str) -> Representation:
    return Representation(alg, {lam: 1}, check=False)


def dualize(m: Representation) -> Representation:
    """Vector-space dual, a representation of the opposite algebra."""
    opp = opposite(m.algebra)
    return Representation(opp, dict(m.dims), {k: a.T for k, a in m.action.items()}, check=False)


def dualize_map(f: ModuleMap) -> ModuleMap:
    """``f^*: D(target) -> D(source)``."""
    return ModuleMap(dualize(f.target), dualize(f.source), {v: b.T for v, b in f.blocks.items()})


def injective(alg: BoundQuiverAlgebra, lam: str) -> Representation:
    return dualize(projective(opposite(alg), lam))


def direct_sum(mods: Sequence[Representation], alg: Optional[BoundQuiverAlgebra] = None) -> tuple:
    """Direct sum with its inclusions and projections.

    Returns:
        ``(S, inclusions, projections)``.
    """
    if not mods:
        if alg is None:
            raise ValueError("direct_sum of nothing needs the algebra")
        z = Representation(alg, {}, check=False)
        return z, [], []
    alg = mods[0].algebra
    dims = {v: sum(m.dims[v] for m in mods) for v in alg.vertices}
    action = {a.name: block_diagonal([m.action[a.name] for m in mods]) for a in alg.quiver.arrows}
    s = Representation(alg, dims, action, check=False)
    incs, projs = [], []
    offs = {v: 0 for v in alg.vertices}
    for m in mods:
        ib, pb = {}, {}
        for v in alg.vertices:
            o, d, n = offs[v], m.dims[v], dims[v]
            ib[v] = Matrix([[1 if i == o + j else 0 for j in range(d)] for i in range(n)], n, d)
            pb[v] = ib[v].T
            offs[v] += d
        incs.append(ModuleMap(m, s, ib))
        projs.append(ModuleMap(s, m, pb))
    return s, incs, projs


def direct_sum_module(mods: Sequence[Representation], alg: Optional[BoundQuiverAlgebra] = None) -> Representation:
    return direct_sum(mods, alg)[0]


def map_from_projective(alg: BoundQuiverAlgebra, lam: str, m: Representation, vec: Sequence,
                        p: Optional[Representation] = None) -> ModuleMap:
    """The map ``P(lam) -> M`` sending ``e_lam`` to ``vec`` in ``M_lam``."""
    p = p or projective(alg, lam)
    blocks = {}
    for v in alg.vertices:
        cols = [m.basis_path_matrix(i).apply(vec) for i in p.basis_paths[v]]
        blocks[v] = Matrix.from_columns(cols, m.dims[v])
    return ModuleMap(p, m, blocks)


def hom(m: Representation, n: Representation) -> list:
    """A basis of ``Hom_A(M, N)`` obtained as the kernel of the intertwining equations."""
    if not same_algebra(m.algebra, n.algebra):
        raise DimensionMismatch("modules over different algebras")
    return _maps_from_kernel(m, n, _hom_space(m, n))


def hom_space(m: Representation, n: Representation) -> tuple:
    """``(subspace of flattened block tuples, basis maps)``; use ``space.coords(f.flatten())``
    for the coordinates of a map in the basis."""
    if not same_algebra(m.algebra, n.algebra):
        raise DimensionMismatch("modules over different algebras")
    space = _hom_space(m, n)
    return space, _maps_from_kernel(m, n, space)


def hom_dim(m: Representation, n: Representation) -> int:
    return _hom_space(m, n).dim


def _hom_space(m: Representation, n: Representation) -> Subspace:
    alg = m.algebra
    var = {}
    nv = 0
    for v in alg.vertices:
        var[v] = nv
        nv += n.dims[v] * m.dims[v]
    if nv == 0:
        return Subspace.zero(0)
    rows = []
    for a in alg.quiver.arrows:
        s, t = a.source, a.target
        na, ma = n.action[a.name].rows, m.action[a.name].rows
        dms, dmt, dns = m.dims[s], m.dims[t], n.dims[s]
        for i in range(n.dims[t]):
            for j in range(dms):
                row = [0] * nv
                # (N(a) X_s)[i][j] - (X_t M(a))[i][j]
                for k in range(dns):
                    c = na[i][k]
                    if c:
                        row[var[s] + k * dms + j] += c
                for l in range(dmt):
                    c = ma[l][j]
                    if c:
                        row[var[t] + i * dmt + l] -= c
                if any(row):
                    rows.append(row)
    if not rows:
        return Subspace.full(nv)
    return kernel(Matrix(rows, len(rows), nv))


def _maps_from_kernel(m: Representation, n: Representation, space: Subspace) -> list:
    alg = m.algebra
    out = []
    for vec in space.basis:
        blocks = {}
        off = 0
        for v in alg.vertices:
            r, c = n.dims[v], m.dims[v]
            blocks[v] = Matrix([vec[off + i * c: off + (i + 1) * c] for i in range(r)], r, c)
            off += r * c
        out.append(ModuleMap(m, n, blocks))
    return out


def map_image(f: ModuleMap) -> Submodule:
    return Submodule(f.target, {v: image(b) for v, b in f.blocks.items()})


def map_kernel(f: ModuleMap) -> Submodule:
    return Submodule(f.source, {v: kernel(b) for v, b in f.blocks.items()})


def trace(m: Representation, n: Representation) -> Submodule:
    """``Tr_M N``: the sum of the images of all maps ``M -> N``."""
    acc = Submodule.zero(n)
    for f in hom(m, n):
        acc = acc + map_image(f)
    return acc


def trace_of_projectives(labels: Iterable[str], n: Representation) -> Submodule:
    """Trace of ``sum_{lam in labels} P(lam)`` in ``N``: the submodule generated by those vertex spaces."""
    return generated_submodule(n, {v: [tuple(1 if i == j else 0 for i in range(n.dims[v]))
                                       for j in range(n.dims[v])] for v in labels})


def submodule_of(m: Representation, s: Submodule) -> tuple:
    """``(S as a representation, inclusion S -> M)``."""
    alg = m.algebra
    action = {}
    for a in alg.quiver.arrows:
        src, tgt = s.spaces[a.source], s.spaces[a.target]
        mat = m.action[a.name]
        cols = [tgt.coords(mat.apply(b)) for b in src.basis]
        action[a.name] = Matrix.from_columns(cols, tgt.dim)
    sm = Representation(alg, s.dims, action, check=False)
    inc = ModuleMap(sm, m, {v: s.spaces[v].matrix() for v in alg.vertices})
    return sm, inc


def quotient(m: Representation, s: Submodule) -> tuple:
    """``(M/S, projection M -> M/S)``; coordinates are the non-pivot positions of each ``S_v``."""
    alg = m.algebra
    proj = {v: s.spaces[v].quotient_matrix() for v in alg.vertices}
    sect = {v: Matrix.from_columns(s.spaces[v].complement_basis(), m.dims[v]) for v in alg.vertices}
    action = {a.name: proj[a.target] @ m.action[a.name] @ sect[a.source] for a in alg.quiver.arrows}
    qm = Representation(alg, {v: proj[v].nrows for v in alg.vertices}, action, check=False)
    return qm, ModuleMap(m, qm, proj)


sub = submodule_of


def socle(m: Representation) -> Submodule:
    spaces = {}
    for v in m.algebra.vertices:
        outs = m.algebra.quiver.out_arrows(v)
        if not outs:
            spaces[v] = Subspace.full(m.dims[v])
            continue
        stacked = None
        for a in outs:
            mat = m.action[a.name]
            stacked = mat if stacked is None else stacked.vstack(mat)
        spaces[v] = kernel(stacked)
    return Submodule(m, spaces)


def radical(m: Representation) -> Submodule:
    spaces = {}
    for v in m.algebra.vertices:
        acc = Subspace.zero(m.dims[v])
        for a in m.algebra.quiver.in_arrows(v):
            acc = acc + image(m.action[a.name])
        spaces[v] = acc
    return Submodule(m, spaces)


def head(m: Representation) -> list:
    """Head multiplicities ``[(label, mult)]`` in vertex order, zeros omitted."""
    rad = radical(m)
    return [(v, m.dims[v] - rad.spaces[v].dim) for v in m.algebra.vertices
            if m.dims[v] - rad.spaces[v].dim]


def socle_labels(m: Representation) -> list:
    soc = socle(m)
    return [(v, soc.spaces[v].dim) for v in m.algebra.vertices if soc.spaces[v].dim]


def projective_cover(m: Representation) -> tuple:
    """Projective cover ``P -> M``.

    Head generators are the unit vectors at the non-pivot positions of each
    ``rad_v``, vertices in algebra order.

    Returns:
        ``(P, cover map, labels)`` with ``labels`` the summand labels of ``P`` in order.
    """
    alg = m.algebra
    rad = radical(m)
    labels, gens = [], []
    for v in alg.vertices:
        for g in rad.spaces[v].complement_basis():
            labels.append(v)
            gens.append(g)
    projs = {v: projective(alg, v) for v in set(labels)}
    summands = [projs[v] for v in labels]
    p, _, prj = direct_sum(summands, alg)
    blocks = {v: Matrix.zeros(m.dims[v], p.dims[v]) for v in alg.vertices}
    for lam, g, pr in zip(labels, gens, prj):
        f = map_from_projective(alg, lam, m, g, projs[lam]) @ pr
        blocks = {v: blocks[v] + f.blocks[v] for v in alg.vertices}
    cover = ModuleMap(p, m, blocks)
    p.summand_labels = labels
    return p, cover, labels


def syzygy(m: Representation) -> tuple:
    """``(Omega M, inclusion into P, P, labels)`` from the projective cover."""
    p, cover, labels = projective_cover(m)
    k, inc = submodule_of(p, map_kernel(cover))
    return k, inc, p, labels


def injective_hull(m: Representation) -> tuple:
    """Injective hull ``M -> I`` (dual of the projective cover over the opposite algebra).

    Returns:
        ``(I, embedding, labels)``.
    """
    p, cover, labels = projective_cover(dualize(m))
    emb = dualize_map(cover)
    # dualize(dualize(M)) is literally M
    emb = ModuleMap(m, emb.target, emb.blocks)
    return emb.target, emb, labels


def minimal_resolution(m: Representation, length: int) -> list:
    """Terms of the minimal projective resolution.

    Returns:
        list of ``(labels of P_n, Omega^{n+1} M)`` for ``n = 0 .. length-1``,
        stopping early when a syzygy vanishes.
    """
    out = []
    cur = m
    for _ in range(length):
        if cur.is_zero():
            break
        k, _, _, labels = syzygy(cur)
        out.append((labels, k))
        cur = k
    return out


def projective_dimension(m: Representation, cap: int) -> Optional[int]:
    """Projective dimension, or ``None`` if the resolution is still nonzero after ``cap`` steps."""
    if m.is_zero():
        return 0
    cur = m
    for n in range(cap + 1):
        k, _, _, _ = syzygy(cur)
        if k.is_zero():
            return n
        cur = k
    return None


def ext_dim(m: Representation, n: Representation, degree: int, cap: int = 20) -> int:
    """``dim Ext^degree(M, N)`` from the minimal projective resolution of ``M``.

    Uses ``0 -> Omega^k -> P_{k-1} -> Omega^{k-1} -> 0`` and
    ``dim Hom(P(v), N) = dim N_v``.
    """
    from .errors import ResolutionCapExceeded

    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree == 0:
        return hom_dim(m, n)
    if degree > cap:
        raise ResolutionCapExceeded(f"degree {degree} exceeds resolution cap {cap}")
    prev = m
    for k in range(1, degree + 1):
        omega, _, _, labels = syzygy(prev)
        if omega.is_zero():
            if k < degree:
                return 0
        if k == degree:
            return hom_dim(omega, n) - sum(n.dims[v] for v in labels) + hom_dim(prev, n)
        prev = omega
    raise AssertionError("unreachable")


def is_projective(m: Representation) -> bool:
    p, _, _ = projective_cover(m)
    return p.total_dim == m.total_dim


def is_injective(m: Representation) -> bool:
    return is_projective(dualize(m))


def restrict_scalars_check(m: Representation) -> bool:
    """Re-run the relation check on ``m`` (for property tests)."""
    try:
        m.validate()
    except DimensionMismatch:
        return False
    return True


def solve_lift(f: ModuleMap, g: ModuleMap) -> Optional[ModuleMap]:
    """Some ``h`` with ``g o h = f`` (``f: P -> N``, ``g: M -> N``), found in ``Hom(P, M)``."""
    basis = hom(f.source, g.source)
    if not basis:
        return zero_map(f.source, g.source) if f.is_zero() else None
    cols = [(g @ h).flatten() for h in basis]
    target = f.flatten()
    a = Matrix.from_columns(cols, len(target))
    x = solve(a, Matrix([[t] for t in target], len(target), 1))
    if x is None:
        return None
    return linear_combination_maps([x[i, 0] for i in range(len(basis))], basis)


def factor_through(f: ModuleMap, g: ModuleMap) -> Optional[ModuleMap]:
    """Some ``h`` with ``h o g = f`` (``g: M -> N``, ``f: M -> X``), found in ``Hom(N, X)``."""
    basis = hom(g.target, f.target)
    if not basis:
        return zero_map(g.target, f.target) if f.is_zero() else None
    cols = [(h @ g).flatten() for h in basis]
    target = f.flatten()
    a = Matrix.from_columns(cols, len(target))
    x = solve(a, Matrix([[t] for t in target], len(target), 1))
    if x is None:
        return None
    return linear_combination_maps([x[i, 0] for i in range(len(basis))], basis)
