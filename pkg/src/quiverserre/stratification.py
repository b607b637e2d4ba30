"""Standardly stratified structures on a bound quiver algebra.

Flag detection peels trace filtrations: for the labels ordered by a linear
extension of the preorder (largest class first), the trace of the projectives
of the current class must be a direct sum of standard (or proper standard)
modules, and the quotient recurses on the remaining classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .algebra import BoundQuiverAlgebra, opposite
from .errors import StratificationInvalid
from .modules import (
    Representation,
    Submodule,
    dualize,
    ext_dim,
    generated_submodule,
    projective,
    quotient,
    radical,
    submodule_of,
    trace_of_projectives,
)
from .predicates import Verdict

FAMILIES = ("Delta", "DeltaBar", "Nabla", "NablaBar")


class StratOrder:
    """A preorder on simple labels, stored as its reflexive-transitive closure.

    Args:
        labels: all labels, in input order (used for tie-breaking).
        pairs: generating pairs ``(lam, mu)`` meaning ``lam <= mu``.
    """

    def __init__(self, labels: Sequence[str], pairs: Iterable = ()):
        self.labels = tuple(str(x) for x in labels)
        pos = {x: i for i, x in enumerate(self.labels)}
        self.generators = tuple(sorted({(str(a), str(b)) for a, b in pairs}, key=lambda p: (pos.get(p[0], -1), pos.get(p[1], -1))))
        for a, b in self.generators:
            if a not in pos or b not in pos:
                raise ValueError(f"order pair ({a}, {b}) uses an unknown label")
        n = len(self.labels)
        le = [[i == j for j in range(n)] for i in range(n)]
        for a, b in self.generators:
            le[pos[a]][pos[b]] = True
        for k in range(n):
            for i in range(n):
                if le[i][k]:
                    for j in range(n):
                        if le[k][j]:
                            le[i][j] = True
        self._le = le
        self._pos = pos

    @classmethod
    def chain(cls, labels: Sequence[str]) -> "StratOrder":
        """Total order ``labels[0] < labels[1] < ...``."""
        return cls(labels, list(zip(labels, labels[1:])))

    @classmethod
    def discrete(cls, labels: Sequence[str]) -> "StratOrder":
        return cls(labels, [])

    def le(self, a: str, b: str) -> bool:
        return self._le[self._pos[a]][self._pos[b]]

    def lt(self, a: str, b: str) -> bool:
        return self.le(a, b) and not self.le(b, a)

    def strictly_above(self, lam: str) -> list:
        return [m for m in self.labels if self.lt(lam, m)]

    def above(self, lam: str) -> list:
        return [m for m in self.labels if self.le(lam, m)]

    def is_antisymmetric(self) -> bool:
        return not any(self.le(a, b) and self.le(b, a) for a in self.labels for b in self.labels if a != b)

    def classes_descending(self) -> list:
        """Equivalence classes, each after every strictly larger class; ties by input order."""
        remaining = list(self.labels)
        out = []
        while remaining:
            maximal = [x for x in remaining if not any(self.lt(x, y) for y in remaining)]
            first = maximal[0]
            cls_ = [y for y in remaining if self.le(first, y) and self.le(y, first)]
            out.append(cls_)
            remaining = [y for y in remaining if y not in cls_]
        return out

    def linear_extension(self) -> list:
        """Labels from largest to smallest."""
        return [x for c in self.classes_descending() for x in c]

    def pairs(self) -> list:
        """All non-reflexive related pairs of the closure."""
        return [(a, b) for a in self.labels for b in self.labels if a != b and self.le(a, b)]

    def reversed(self) -> "StratOrder":
        return StratOrder(self.labels, [(b, a) for a, b in self.pairs()])

    def relabel(self, mapping: dict) -> "StratOrder":
        return StratOrder([mapping[x] for x in self.labels], [(mapping[a], mapping[b]) for a, b in self.pairs()])

    def to_json(self) -> dict:
        return {"pairs": [list(p) for p in self.generators]}

    def __eq__(self, other) -> bool:
        return isinstance(other, StratOrder) and set(self.labels) == set(other.labels) and \
            set(self.pairs()) == set(other.pairs())

    def __repr__(self) -> str:
        return f"StratOrder({list(self.labels)}, {self.pairs()})"


def order_from_json(labels: Sequence[str], data: dict) -> StratOrder:
    return StratOrder(labels, [tuple(p) for p in data.get("pairs", [])])


@dataclass
class FlagCertificate:
    """Subquotient labels of a flag, bottom (submodule) first."""

    family: str
    labels: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"family": self.family, "labels": list(self.labels)}


class StratifiedAlgebra:
    """An algebra with a fixed preorder on its simple labels."""

    def __init__(self, algebra: BoundQuiverAlgebra, order: StratOrder):
        if set(order.labels) != set(algebra.vertices):
            raise ValueError("order labels must be exactly the vertices")
        self.algebra = algebra
        self.order = order
        self._cache = {}
        self._opp = None
        self._ss = None

    @property
    def labels(self) -> tuple:
        return self.algebra.vertices

    def opposite(self) -> "StratifiedAlgebra":
        if self._opp is None:
            self._opp = StratifiedAlgebra(opposite(self.algebra), self.order)
            self._opp._opp = self
        return self._opp

    def _cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def delta(self, lam: str) -> Representation:
        return self._cached(("Delta", lam), lambda: standard_module(self, lam))

    def delta_bar(self, lam: str) -> Representation:
        return self._cached(("DeltaBar", lam), lambda: proper_standard_module(self, lam))

    def nabla(self, lam: str) -> Representation:
        return self._cached(("Nabla", lam), lambda: dualize(self.opposite().delta(lam)))

    def nabla_bar(self, lam: str) -> Representation:
        return self._cached(("NablaBar", lam), lambda: dualize(self.opposite().delta_bar(lam)))

    def module(self, family: str, lam: str) -> Representation:
        return {"Delta": self.delta, "DeltaBar": self.delta_bar,
                "Nabla": self.nabla, "NablaBar": self.nabla_bar}[family](lam)

    def standardly_stratified(self) -> bool:
        if self._ss is None:
            self._ss = bool(is_standardly_stratified(self))
        return self._ss


def standard_module(s: StratifiedAlgebra, lam: str) -> Representation:
    """``Delta(lam) = P(lam) / Tr_{P^{>lam}} P(lam)``."""
    p = projective(s.algebra, lam)
    return quotient(p, trace_of_projectives(s.order.strictly_above(lam), p))[0]


def standard_kernel(s: StratifiedAlgebra, lam: str) -> Representation:
    p = projective(s.algebra, lam)
    return submodule_of(p, trace_of_projectives(s.order.strictly_above(lam), p))[0]


def proper_standard_module(s: StratifiedAlgebra, lam: str) -> Representation:
    """``P(lam) / Tr_{P^{>=lam}} rad P(lam)``."""
    p = projective(s.algebra, lam)
    rad = radical(p)
    gens = {v: list(rad.spaces[v].basis) for v in s.order.above(lam)}
    return quotient(p, generated_submodule(p, gens))[0]


def costandard_module(s: StratifiedAlgebra, lam: str) -> Representation:
    return s.nabla(lam)


def proper_costandard_module(s: StratifiedAlgebra, lam: str) -> Representation:
    return s.nabla_bar(lam)


def _direct_sum_dim(s: StratifiedAlgebra, family: str, mults: list) -> int:
    return sum(k * s.module(family, lam).total_dim for lam, k in mults)


def _peel(s: StratifiedAlgebra, m: Representation, proper: bool) -> Optional[list]:
    family = "DeltaBar" if proper else "Delta"
    labels = []
    cur = m
    for cls_ in s.order.classes_descending():
        if cur.is_zero():
            break
        u_sub = trace_of_projectives(cls_, cur)
        u, _ = submodule_of(cur, u_sub)
        if proper:
            layers = []
            layer = u
            while not layer.is_zero():
                rad = radical(layer)
                r = generated_submodule(layer, {v: list(rad.spaces[v].basis) for v in cls_})
                mults = [(v, layer.dims[v] - r.spaces[v].dim) for v in cls_
                         if layer.dims[v] - r.spaces[v].dim]
                if not mults or layer.total_dim - r.total_dim != _direct_sum_dim(s, family, mults):
                    return None
                layers.append([v for v, k in mults for _ in range(k)])
                layer = submodule_of(layer, r)[0]
            # deeper layers are further down the flag
            for ls in reversed(layers):
                labels.extend(ls)
        else:
            mults = _head_on(u, cls_)
            if u.total_dim != _direct_sum_dim(s, family, mults):
                return None
            labels.extend(v for v, k in mults for _ in range(k))
        cur = quotient(cur, u_sub)[0]
    if not cur.is_zero():
        return None
    # traces of the largest labels come first and form the bottom of the flag
    return labels


def _head_on(u: Representation, labels: Sequence[str]) -> list:
    rad = radical(u)
    return [(v, u.dims[v] - rad.spaces[v].dim) for v in labels if u.dims[v] - rad.spaces[v].dim]


def has_flag(s: StratifiedAlgebra, m: Representation, family: str = "Delta",
             cross_check: Optional[bool] = None) -> Optional[FlagCertificate]:
    """A flag of ``m`` by the given family, or ``None``.

    Args:
        family: one of ``Delta``, ``DeltaBar``, ``Nabla``, ``NablaBar``.
        cross_check: compare a Delta answer against ``Ext^1(M, NablaBar(mu)) = 0``.
            Defaults to doing so once the algebra is known to be standardly stratified.

    Raises:
        StratificationInvalid: the two Delta criteria disagree.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family in ("Nabla", "NablaBar"):
        dual_family = "Delta" if family == "Nabla" else "DeltaBar"
        cert = has_flag(s.opposite(), dualize(m), dual_family, cross_check=False)
        if cert is None:
            return None
        # dualizing turns submodules into quotients
        return FlagCertificate(family, list(reversed(cert.labels)))
    labels = _peel(s, m, proper=(family == "DeltaBar"))
    if family == "Delta":
        if cross_check is None:
            cross_check = s._ss is True
        if cross_check:
            homological = all(ext_dim(m, s.nabla_bar(mu), 1) == 0 for mu in s.labels)
            if homological != (labels is not None):
                raise StratificationInvalid(
                    f"constructive flag search says {labels is not None}, Ext criterion says {homological}")
    return None if labels is None else FlagCertificate(family, labels)


def is_standardly_stratified(s: StratifiedAlgebra) -> Verdict:
    """Both conditions per label: the kernel of ``P -> Delta`` has a Delta-flag, and
    ``rad Delta(lam)`` only has composition factors ``L(mu)`` with ``mu <= lam``."""
    witnesses = {}
    for lam in s.labels:
        k = standard_kernel(s, lam)
        cert = has_flag(s, k, "Delta", cross_check=False)
        if cert is None:
            s._ss = False
            return Verdict(False, {"label": lam, "condition": "a",
                                   "reason": "kernel of P -> Delta has no standard flag"})
        d = s.delta(lam)
        rad_dims = dict(d.dims)
        rad_dims[lam] -= 1
        bad = [mu for mu, n in rad_dims.items() if n and not s.order.le(mu, lam)]
        if bad:
            s._ss = False
            return Verdict(False, {"label": lam, "condition": "b",
                                   "reason": f"rad Delta has composition factors {bad}"})
        witnesses[lam] = cert.labels
    s._ss = True
    return Verdict(True, {"kernelFlags": witnesses})


def is_quasi_hereditary(s: StratifiedAlgebra) -> Verdict:
    if not s.standardly_stratified():
        return Verdict(False, {"reason": "not standardly stratified"})
    if not s.order.is_antisymmetric():
        return Verdict(False, {"reason": "order is not antisymmetric"})
    for lam in s.labels:
        # DeltaBar is a quotient of Delta, so equal dimension means equal modules
        if s.delta(lam).total_dim != s.delta_bar(lam).total_dim:
            return Verdict(False, {"label": lam, "reason": "Delta differs from DeltaBar"})
    return Verdict(True)


def is_properly_stratified(s: StratifiedAlgebra) -> Verdict:
    if not s.standardly_stratified():
        return Verdict(False, {"reason": "not standardly stratified"})
    if not s.order.is_antisymmetric():
        return Verdict(False, {"reason": "order is not antisymmetric"})
    for lam in s.labels:
        if has_flag(s, s.delta(lam), "DeltaBar") is None:
            return Verdict(False, {"label": lam, "reason": "Delta has no proper standard flag"})
    return Verdict(True)


def summary(s: StratifiedAlgebra) -> dict:
    ss = is_standardly_stratified(s)
    return {
        "standardlyStratified": ss.ok,
        "quasiHereditary": is_quasi_hereditary(s).ok,
        "properlyStratified": is_properly_stratified(s).ok,
        "delta": {lam: s.delta(lam).dims for lam in s.labels},
        "deltaBar": {lam: s.delta_bar(lam).dims for lam in s.labels},
        "nabla": {lam: s.nabla(lam).dims for lam in s.labels},
        "nablaBar": {lam: s.nabla_bar(lam).dims for lam in s.labels},
        "witness": ss.witness,
    }
