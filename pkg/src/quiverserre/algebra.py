"""Bound quiver algebras over the rationals.

Convention: in a product ``p*q`` of paths, ``p`` is traversed first, so the
path ``(a1, a2)`` requires ``target(a1) == source(a2)``. The same convention
is used for relations, module actions and the opposite algebra.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import MalformedRelation, NonAdmissible, NotDirected
from .linalg import Matrix, Subspace, q, rational_str


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    """Finite quiver with string vertex labels and named arrows."""

    def __init__(self, vertices: Iterable, arrows: Iterable = ()):
        self.vertices = tuple(str(v) for v in vertices)
        arrs = []
        for a in arrows:
            if isinstance(a, Arrow):
                arrs.append(a)
            else:
                name, s, t = a
                arrs.append(Arrow(str(name), str(s), str(t)))
        self.arrows = tuple(arrs)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        vset = set(self.vertices)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise ValueError(f"arrow {a.name} refers to an unknown vertex")
        self._by_name = {a.name: a for a in self.arrows}
        self.index = {v: i for i, v in enumerate(self.vertices)}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise MalformedRelation(f"unknown arrow {name!r}") from None

    def out_arrows(self, v: str) -> list:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> list:
        return [a for a in self.arrows if a.target == v]

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows)

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def __repr__(self) -> str:
        return f"Quiver({list(self.vertices)}, {[(a.name, a.source, a.target) for a in self.arrows]})"


@dataclass(frozen=True)
class Path:
    """A path in a quiver; ``arrows == ()`` is the trivial path at ``source``."""

    source: str
    target: str
    arrows: tuple = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return ".".join(self.arrows)


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths set to zero."""

    terms: tuple  # of (coefficient, tuple of arrow names)

    @classmethod
    def of(cls, *terms) -> "Relation":
        """``Relation.of((1, ["a","b"]), (-1, ["c","d"]))``; a bare path means coefficient 1."""
        out = []
        for t in terms:
            if isinstance(t, (list, tuple)) and len(t) == 2 and not isinstance(t[0], str):
                c, p = t
            else:
                c, p = 1, t
            out.append((q(c), tuple(p)))
        return cls(tuple(out))

    def reversed(self) -> "Relation":
        return Relation(tuple((c, tuple(reversed(p))) for c, p in self.terms))


def _path_of(quiver: Quiver, arrows: Sequence[str]) -> Path:
    arrows = tuple(arrows)
    if not arrows:
        raise MalformedRelation("relation paths must be nonempty")
    first = quiver.arrow(arrows[0])
    cur = first.target
    for name in arrows[1:]:
        a = quiver.arrow(name)
        if a.source != cur:
            raise MalformedRelation(f"path {arrows} is not composable at arrow {name}")
        cur = a.target
    return Path(first.source, cur, arrows)


def enumerate_paths(quiver: Quiver, max_length: int) -> list:
    """All paths of length at most ``max_length``, grouped by length."""
    paths = [Path(v, v) for v in quiver.vertices]
    layer = [Path(a.source, a.target, (a.name,)) for a in quiver.arrows]
    length = 1
    while layer and length <= max_length:
        paths.extend(layer)
        nxt = []
        for p in layer:
            for a in quiver.out_arrows(p.target):
                nxt.append(Path(p.source, a.target, p.arrows + (a.name,)))
        layer = nxt
        length += 1
    return paths


def concat(p: Path, r: Path) -> Optional[Path]:
    if p.target != r.source:
        return None
    return Path(p.source, r.target, p.arrows + r.arrows)


class BoundQuiverAlgebra:
    """``kQ/I`` with a path basis and structure constants.

    Attributes:
        quiver: the quiver.
        relations: the relations as given.
        basis: list of :class:`Path`, idempotents first, then arrows, then longer paths.
        dim: number of basis elements.
        e: map vertex label -> basis index of its idempotent.
    """

    def __init__(self, quiver: Quiver, relations: Sequence[Relation], basis: list,
                 normal_forms: dict, length_cap: int, nilpotency: int):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.basis = basis
        self.dim = len(basis)
        self.length_cap = length_cap
        self.nilpotency = nilpotency
        self.index = {p: i for i, p in enumerate(basis)}
        self.e = {v: self.index[Path(v, v)] for v in quiver.vertices}
        self._nf = normal_forms
        self._mult = self._structure_constants()

    # -- normal forms -----------------------------------------------------
    def reduce_path(self, p: Path) -> dict:
        """Normal form of a path as a sparse vector ``{basis index: coefficient}``."""
        if p.length >= self.nilpotency:
            return {}
        i = self.index.get(p)
        if i is not None:
            return {i: 1}
        return self._nf.get(p, {})

    def _structure_constants(self) -> list:
        table = []
        for p in self.basis:
            row = []
            for r in self.basis:
                c = concat(p, r)
                row.append(self.reduce_path(c) if c is not None else {})
            table.append(row)
        return table

    def product(self, i: int, j: int) -> dict:
        """``b_i * b_j`` as a sparse vector."""
        return self._mult[i][j]

    @property
    def structure_constants(self) -> list:
        return self._mult

    def multiply(self, x: Sequence, y: Sequence) -> tuple:
        out = [0] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, c in self._mult[i][j].items():
                    out[k] += a * b * c
        return tuple(q(v) for v in out)

    def unit(self) -> tuple:
        v = [0] * self.dim
        for i in self.e.values():
            v[i] = 1
        return tuple(v)

    def basis_vector(self, i: int) -> tuple:
        return tuple(1 if k == i else 0 for k in range(self.dim))

    def left_mult_matrix(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> x*y``."""
        cols = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.dim)

    def right_mult_matrix(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> y*x``."""
        cols = [self.multiply(self.basis_vector(j), x) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.dim)

    # -- helpers ----------------------------------------------------------
    @property
    def vertices(self) -> tuple:
        return self.quiver.vertices

    def paths_from(self, v: str) -> list:
        return [i for i, p in enumerate(self.basis) if p.source == v]

    def paths_between(self, u: str, v: str) -> list:
        return [i for i, p in enumerate(self.basis) if p.source == u and p.target == v]

    def cartan_matrix(self) -> list:
        """``C[i][j] = dim e_i A e_j``: number of basis paths from vertex i to vertex j."""
        return [[len(self.paths_between(u, v)) for v in self.vertices] for u in self.vertices]

    def check_associativity(self) -> bool:
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self._mult[i][j]
                for k in range(n):
                    left = {}
                    for m, c in ij.items():
                        for t, d in self._mult[m][k].items():
                            left[t] = left.get(t, 0) + c * d
                    right = {}
                    for m, c in self._mult[j][k].items():
                        for t, d in self._mult[i][m].items():
                            right[t] = right.get(t, 0) + c * d
                    if {a: b for a, b in left.items() if b} != {a: b for a, b in right.items() if b}:
                        return False
        return True

    # -- identity ---------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vertices": list(self.quiver.vertices),
            "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in self.quiver.arrows],
            "relations": [[{"coef": rational_str(c), "path": list(p)} for c, p in r.terms]
                          for r in self.relations],
            "lengthCap": self.length_cap,
        }

    def content_hash(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoundQuiverAlgebra):
            return NotImplemented
        return self.to_json() == other.to_json()

    def __hash__(self) -> int:
        return hash(self.content_hash())

    def __repr__(self) -> str:
        return f"BoundQuiverAlgebra(vertices={list(self.vertices)}, dim={self.dim})"


def _validate_relations(quiver: Quiver, rels: Sequence[Relation]) -> list:
    out = []
    for r in rels:
        if not r.terms:
            raise MalformedRelation("empty relation")
        paths = [(q(c), _path_of(quiver, p)) for c, p in r.terms]
        ends = {(p.source, p.target) for _, p in paths}
        if len(ends) != 1:
            raise MalformedRelation(f"relation mixes non-parallel paths: {[str(p) for _, p in paths]}")
        if any(p.length < 2 for _, p in paths):
            raise MalformedRelation("relation paths must have length at least 2")
        out.append(paths)
    return out


def build_algebra(quiver: Quiver, relations: Sequence[Relation] = (), length_cap: int = 12) -> BoundQuiverAlgebra:
    """Construct ``kQ/I`` for the ideal ``I`` generated by ``relations``.

    For ``N = 1, 2, ...`` the quotient ``kQ/(I + J_{N+1})`` is computed, where
    ``J_L`` is spanned by the paths of length at least ``L``. The first ``N``
    at which every path of length ``N`` already lies in ``I + J_{N+1}`` gives
    ``J_N`` inside ``I``, so ``kQ/I = kQ/(I + J_N)``.

    Raises:
        MalformedRelation: a relation is not a combination of parallel paths of length >= 2.
        NonAdmissible: no such ``N`` was found up to ``length_cap``.
    """
    if length_cap < 1:
        raise ValueError("length_cap must be at least 1")
    rels = _validate_relations(quiver, relations)
    for n in range(1, length_cap + 1):
        result = _truncated_quotient(quiver, rels, n)
        if result is not None:
            basis, nf = result
            alg = BoundQuiverAlgebra(quiver, [Relation(tuple((c, p.arrows) for c, p in r)) for r in rels],
                                     basis, nf, length_cap, n)
            if not alg.check_associativity():  # pragma: no cover - would indicate a bug
                raise AssertionError("structure constants are not associative")
            return alg
    raise NonAdmissible(f"paths of length {length_cap} survive the relations")


def _truncated_quotient(quiver: Quiver, rels: list, n: int):
    paths = enumerate_paths(quiver, n)
    # longest first, so that pivots land on long paths and short paths stay basis elements
    order = sorted(range(len(paths)), key=lambda i: (-paths[i].length, i))
    cols = [paths[i] for i in order]
    col_of = {p: j for j, p in enumerate(cols)}
    m = len(cols)
    gens = []
    shorter = [p for p in paths if p.length < n]
    for r in rels:
        minlen = min(p.length for _, p in r)
        if minlen > n:
            continue
        s, t = r[0][1].source, r[0][1].target
        lefts = [u for u in shorter if u.target == s and u.length + minlen <= n]
        rights = [w for w in shorter if w.source == t and w.length + minlen <= n]
        for u in lefts:
            for w in rights:
                if u.length + w.length + minlen > n:
                    continue
                v = [0] * m
                for c, p in r:
                    full = Path(u.source, w.target, u.arrows + p.arrows + w.arrows)
                    if full.length <= n:
                        v[col_of[full]] += c
                if any(v):
                    gens.append(v)
    ideal = Subspace(m, gens)
    longest = [p for p in cols if p.length == n]
    if any(not ideal.contains(_unit(m, col_of[p])) for p in longest):
        return None
    ideal = ideal + Subspace(m, [_unit(m, col_of[p]) for p in longest])
    pivots = set(ideal.pivots)
    survivors = [cols[j] for j in range(m) if j not in pivots]
    pos = {p: i for i, p in enumerate(paths)}
    survivors.sort(key=lambda p: (p.length, pos[p]))
    idx = {p: i for i, p in enumerate(survivors)}
    nf = {}
    for j, p in enumerate(cols):
        if p in idx or p.length >= n:
            continue
        red = ideal.reduce(_unit(m, j))
        nf[p] = {idx[cols[k]]: c for k, c in enumerate(red) if c}
    return survivors, nf


def _unit(m: int, j: int) -> list:
    v = [0] * m
    v[j] = 1
    return v


def opposite(alg: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    """Opposite algebra: every arrow reversed under the same name, every relation path reversed.

    Keeping the arrow names makes ``opposite(opposite(A))`` literally equal to ``A``.
    """
    cached = getattr(alg, "_opposite", None)
    if cached is not None:
        return cached
    opp = build_algebra(alg.quiver.opposite(), [r.reversed() for r in alg.relations], alg.length_cap)
    opp._opposite = alg
    alg._opposite = opp
    return opp


def dual_extension(quiver: Quiver, length_cap: int = 12) -> BoundQuiverAlgebra:
    """Dual extension of the path algebra of a directed quiver.

    Vertices are ordered by their position in ``quiver.vertices``; every arrow
    must go from a later vertex to an earlier one. Each arrow ``a`` gets a
    reversed copy ``a*``; every path "forward arrow, then reversed arrow" is
    set to zero, which is the relation ``rad(A^opp) rad(A) = 0`` written in
    the traversal convention.

    Raises:
        NotDirected: some arrow goes from an earlier vertex to a later one (or is a loop).
    """
    idx = quiver.index
    for a in quiver.arrows:
        if idx[a.source] <= idx[a.target]:
            raise NotDirected(f"arrow {a.name}: {a.source} -> {a.target} violates the vertex order")
    names = {a.name for a in quiver.arrows}
    arrows = list(quiver.arrows)
    for a in quiver.arrows:
        star = a.name + "*"
        if star in names:
            raise ValueError(f"arrow name {star} already used")
        arrows.append(Arrow(star, a.target, a.source))
    rels = []
    for a in quiver.arrows:
        for b in quiver.arrows:
            if a.target == b.target:
                rels.append(Relation.of([a.name, b.name + "*"]))
    return build_algebra(Quiver(quiver.vertices, arrows), rels, length_cap)


def radical_power(alg: BoundQuiverAlgebra, k: int) -> Subspace:
    """Span of basis paths of length at least ``k``; equals ``rad^k A`` for admissible ideals."""
    if k < 0:
        raise ValueError("k must be non-negative")
    vecs = [alg.basis_vector(i) for i, p in enumerate(alg.basis) if p.length >= k]
    return Subspace(alg.dim, vecs)


def algebra_from_json(data: dict) -> BoundQuiverAlgebra:
    quiver = Quiver(data["vertices"], [(a["name"], a["from"], a["to"]) for a in data.get("arrows", [])])
    rels = [Relation(tuple((q(Fraction(t["coef"])), tuple(t["path"])) for t in r))
            for r in data.get("relations", [])]
    return build_algebra(quiver, rels, int(data.get("lengthCap", 12)))
