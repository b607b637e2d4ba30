"""Bound quiver presentations of endomorphism algebras of basic modules.

For ``X = X(1) + ... + X(n)`` with pairwise non-isomorphic indecomposable
summands, the presented algebra ``B`` has one vertex per summand and an arrow
``i -> j`` for each map ``X(i) -> X(j)`` in a complement of ``rad^2`` inside
``rad``. Arrows point along maps: the path ``(alpha, beta)`` stands for
``beta o alpha``. Consequently ``Hom_A(M, X)`` (postcomposition) is a
representation of ``B`` and ``Hom_A(X, M)`` (precomposition) one of ``B^opp``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import Arrow, BoundQuiverAlgebra, Quiver, Relation, build_algebra, opposite
from .decomposition import endomorphism_radical_dim
from .linalg import Matrix, Subspace, kernel
from .modules import ModuleMap, Representation, hom_space


@dataclass
class PresentedAlgebra:
    """``End_A(X)`` for basic ``X`` together with its bound quiver presentation.

    Attributes:
        algebra: the presented algebra ``B``.
        summands: label -> indecomposable summand ``X(label)``.
        homs: ``(i, j)`` -> ``(space, basis maps X(i) -> X(j))``.
        arrow_maps: arrow name -> the map it stands for.
        side: ``"maps"``: arrows point along maps (see module docstring).
    """

    algebra: BoundQuiverAlgebra
    summands: dict
    homs: dict
    arrow_maps: dict
    side: str = "maps"
    order: Optional[object] = None

    @property
    def labels(self) -> tuple:
        return self.algebra.vertices

    @property
    def raw_dim(self) -> int:
        return sum(sp.dim for sp, _ in self.homs.values())

    def path_map(self, i: int) -> ModuleMap:
        """The map represented by basis path ``i`` of the presented algebra."""
        p = self.algebra.basis[i]
        if not p.arrows:
            from .modules import identity_map

            return identity_map(self.summands[p.source])
        f = None
        for name in p.arrows:
            g = self.arrow_maps[name]
            f = g if f is None else g @ f
        return f

    def check_multiplication(self) -> bool:
        """Products of presented basis paths agree with composition of maps."""
        alg = self.algebra
        maps = [self.path_map(i) for i in range(alg.dim)]
        for i in range(alg.dim):
            for j in range(alg.dim):
                pi, pj = alg.basis[i], alg.basis[j]
                if pi.target != pj.source:
                    continue
                expect = maps[j] @ maps[i]
                got = None
                for k, c in alg.product(i, j).items():
                    t = maps[k].scale(c)
                    got = t if got is None else got + t
                if got is None:
                    if not expect.is_zero():
                        return False
                elif got.blocks != expect.blocks:
                    return False
        return True


def _coords(space: Subspace, f: ModuleMap) -> tuple:
    return space.coords(f.flatten())


def present_endomorphisms(summands: Sequence[Representation], labels: Sequence[str],
                          length_cap: int = 12) -> PresentedAlgebra:
    """Present ``End_A(sum X(i))`` as a bound quiver algebra on ``labels``.

    The summands must be indecomposable and pairwise non-isomorphic.
    """
    labels = [str(x) for x in labels]
    xs = dict(zip(labels, summands))
    homs = {(i, j): hom_space(xs[i], xs[j]) for i in labels for j in labels}

    def to_map(i, j, vec):
        space, basis = homs[(i, j)]
        f = None
        for c, b in zip(vec, basis):
            if c:
                t = b.scale(c)
                f = t if f is None else f + t
        return f if f is not None else ModuleMap(xs[i], xs[j], {})

    # radical: all maps between distinct summands, nilpotent endomorphisms otherwise
    rad = {}
    for i in labels:
        for j in labels:
            space, basis = homs[(i, j)]
            if i != j:
                rad[(i, j)] = [f for f in basis]
            else:
                mats = [f.total() for f in basis]
                k = len(mats)
                gram = Matrix([[(mats[a] @ mats[b]).trace() for b in range(k)] for a in range(k)], k, k)
                rad[(i, j)] = [to_map(i, i, v) for v in kernel(gram).basis]
    rad2 = {}
    for i in labels:
        for j in labels:
            space = homs[(i, j)][0]
            vecs = [_coords(space, g @ f) for k in labels for f in rad[(i, k)] for g in rad[(k, j)]]
            rad2[(i, j)] = Subspace(space.dim, vecs)
    arrows, arrow_maps = [], {}
    for i in labels:
        for j in labels:
            space = homs[(i, j)][0]
            current = rad2[(i, j)]
            chosen = []
            for f in rad[(i, j)]:
                v = _coords(space, f)
                if not current.contains(v):
                    current = current + Subspace(space.dim, [v])
                    chosen.append(f)
            for n, f in enumerate(chosen):
                name = f"{i}_{j}" if len(chosen) == 1 else f"{i}_{j}_{n + 1}"
                arrows.append(Arrow(name, i, j))
                arrow_maps[name] = f
    quiver = Quiver(labels, arrows)
    relations = _relations(quiver, arrow_maps, homs, xs, length_cap)
    alg = build_algebra(quiver, relations, length_cap)
    pres = PresentedAlgebra(alg, xs, homs, arrow_maps)
    if alg.dim != pres.raw_dim:  # pragma: no cover - would indicate a bug
        raise AssertionError(f"presentation has dimension {alg.dim}, endomorphism ring {pres.raw_dim}")
    return pres


def _relations(quiver: Quiver, arrow_maps: dict, homs: dict, xs: dict, length_cap: int) -> list:
    """Kernel of (paths of length >= 2) -> maps, per vertex pair, up to the nilpotency length."""
    layer = [((a.name,), a.source, a.target, arrow_maps[a.name]) for a in quiver.arrows]
    by_pair = {}
    length = 1
    while layer:
        if length > length_cap:
            raise AssertionError("radical of the endomorphism ring is not nilpotent within the cap")
        nxt = []
        for path, s, t, f in layer:
            if length >= 2:
                by_pair.setdefault((s, t), []).append((path, f))
            if f.is_zero():
                continue
            for a in quiver.out_arrows(t):
                nxt.append((path + (a.name,), s, a.target, arrow_maps[a.name] @ f))
        layer = nxt
        length += 1
    rels = []
    for (s, t), items in by_pair.items():
        space = homs[(s, t)][0]
        cols = [_coords(space, f) for _, f in items]
        if space.dim == 0:
            ker = Subspace.full(len(items))
        else:
            ker = kernel(Matrix.from_columns(cols, space.dim))
        for v in ker.basis:
            rels.append(Relation(tuple((c, items[k][0]) for k, c in enumerate(v) if c)))
    return rels


def contravariant_hom(m: Representation, pres: PresentedAlgebra) -> Representation:
    """``Hom_A(M, X)`` as a representation of the presented algebra (postcomposition)."""
    return contravariant_hom_data(m, pres)[0]


def contravariant_hom_data(m: Representation, pres: PresentedAlgebra) -> tuple:
    spaces = {lam: hom_space(m, pres.summands[lam]) for lam in pres.labels}
    action = {}
    for a in pres.algebra.quiver.arrows:
        alpha = pres.arrow_maps[a.name]
        src_space, src_basis = spaces[a.source]
        tgt_space = spaces[a.target][0]
        cols = [tgt_space.coords((alpha @ f).flatten()) for f in src_basis]
        action[a.name] = Matrix.from_columns(cols, tgt_space.dim)
    rep = Representation(pres.algebra, {lam: spaces[lam][0].dim for lam in pres.labels}, action, check=True)
    return rep, spaces


def contravariant_hom_map(g: ModuleMap, pres: PresentedAlgebra) -> ModuleMap:
    """``Hom(g, X): Hom(M, X) -> Hom(M', X)`` for ``g: M' -> M``."""
    src, sp_src = contravariant_hom_data(g.target, pres)
    tgt, sp_tgt = contravariant_hom_data(g.source, pres)
    blocks = {}
    for lam in pres.labels:
        tsp = sp_tgt[lam][0]
        cols = [tsp.coords((f @ g).flatten()) for f in sp_src[lam][1]]
        blocks[lam] = Matrix.from_columns(cols, tsp.dim)
    return ModuleMap(src, tgt, blocks)


def covariant_hom(pres: PresentedAlgebra, m: Representation) -> Representation:
    """``Hom_A(X, M)`` as a representation of ``opposite(B)`` (precomposition)."""
    return covariant_hom_data(pres, m)[0]


def covariant_hom_data(pres: PresentedAlgebra, m: Representation) -> tuple:
    opp = opposite(pres.algebra)
    spaces = {lam: hom_space(pres.summands[lam], m) for lam in pres.labels}
    action = {}
    for a in pres.algebra.quiver.arrows:
        alpha = pres.arrow_maps[a.name]  # X(s) -> X(t); in B^opp the arrow runs t -> s
        t_space, t_basis = spaces[a.target]
        s_space = spaces[a.source][0]
        cols = [s_space.coords((f @ alpha).flatten()) for f in t_basis]
        action[a.name] = Matrix.from_columns(cols, s_space.dim)
    rep = Representation(opp, {lam: spaces[lam][0].dim for lam in pres.labels}, action, check=True)
    return rep, spaces


def covariant_hom_map(pres: PresentedAlgebra, g: ModuleMap) -> ModuleMap:
    """``Hom(X, g): Hom(X, M) -> Hom(X, N)`` for ``g: M -> N``."""
    src, sp_src = covariant_hom_data(pres, g.source)
    tgt, sp_tgt = covariant_hom_data(pres, g.target)
    blocks = {}
    for lam in pres.labels:
        tsp = sp_tgt[lam][0]
        cols = [tsp.coords((g @ f).flatten()) for f in sp_src[lam][1]]
        blocks[lam] = Matrix.from_columns(cols, tsp.dim)
    return ModuleMap(src, tgt, blocks)


def cartan_equivalent(a: BoundQuiverAlgebra, b: BoundQuiverAlgebra) -> Optional[dict]:
    """A label bijection ``a -> b`` under which the Cartan matrices agree, or ``None``."""
    from itertools import permutations

    if len(a.vertices) != len(b.vertices):
        return None
    ca, cb = a.cartan_matrix(), b.cartan_matrix()
    n = len(a.vertices)
    for perm in permutations(range(n)):
        if all(ca[i][j] == cb[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return {a.vertices[i]: b.vertices[perm[i]] for i in range(n)}
    return None
