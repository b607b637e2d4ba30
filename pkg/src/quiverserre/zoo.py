"""Built-in example algebras with pinned orders and expected report fragments.

Every expected value is re-derived by :func:`zoo_verify`; the ``provenance``
string next to each one says where the value comes from and, where possible,
how it was checked independently of the toolkit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebra import BoundQuiverAlgebra, Quiver, Relation, build_algebra, dual_extension
from .errors import Mismatch, PreconditionFailed, UnknownEntry
from .stratification import StratOrder


@dataclass
class ZooEntry:
    name: str
    description: str
    build: Callable[[], BoundQuiverAlgebra]
    order_pairs: tuple
    expected: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    # engineered fixtures assert the property they exist for when first built
    defining_property: Optional[Callable[["ZooEntry"], bool]] = field(default=None, repr=False)
    _algebra: Optional[BoundQuiverAlgebra] = field(default=None, repr=False)

    @property
    def algebra(self) -> BoundQuiverAlgebra:
        if self._algebra is None:
            self._algebra = self.build()
            if self.defining_property is not None and not self.defining_property(self):
                self._algebra = None
                raise AssertionError(f"zoo entry {self.name!r} lost its defining property")
        return self._algebra

    def provenance_of(self, key: str) -> Optional[str]:
        return self.provenance.get(key, self.provenance.get("*"))

    @property
    def order(self) -> StratOrder:
        return StratOrder(self.algebra.vertices, self.order_pairs)

    def to_json(self) -> dict:
        return {"name": self.name, "algebra": self.algebra.to_json(), "order": self.order.to_json()}


def _chain(*labels) -> tuple:
    return tuple(zip(labels, labels[1:]))


def _properly_not_qh(entry: "ZooEntry") -> bool:
    from .stratification import StratifiedAlgebra, is_properly_stratified, is_quasi_hereditary

    s = StratifiedAlgebra(entry._algebra, entry.order)
    return bool(is_properly_stratified(s)) and not is_quasi_hereditary(s)


def _selfinjective_not_good(entry: "ZooEntry") -> bool:
    from .predicates import is_selfinjective
    from .serre import is_good

    alg = entry._algebra
    return bool(is_selfinjective(alg)) and not any(is_good([v], alg) for v in alg.vertices)


def _tri3() -> BoundQuiverAlgebra:
    # upper triangular 3x3 matrices: linear quiver 3 -> 2 -> 1, no relations
    return build_algebra(Quiver(["1", "2", "3"], [("a", "3", "2"), ("b", "2", "1")]))


_INF = "infinite"

_ENTRIES = [
    ZooEntry(
        "point", "the field itself",
        lambda: build_algebra(Quiver(["1"], [])), (),
        {"dim": 1, "selfInjective": True, "symmetric": True, "globalDimension": 0,
         "quasiHereditary": True, "projectiveInjective": ["1"], "good": True,
         "doubleCentraliserWithQ": True, "centreDim": 1, "serreEquivalence": [True, True, True],
         "serreTableEqual": True},
        {"*": "trivial: semisimple, every module projective and injective"},
    ),
    ZooEntry(
        "dual-numbers", "k[x]/(x^2)",
        lambda: build_algebra(Quiver(["1"], [("x", "1", "1")]), [Relation.of(["x", "x"])]), (),
        {"dim": 2, "selfInjective": True, "symmetric": True, "globalDimension": _INF,
         "standardlyStratified": True, "quasiHereditary": False, "properlyStratified": True,
         "projectiveInjective": ["1"], "good": True, "doubleCentraliserWithQ": True, "centreDim": 2,
         "serreEquivalence": "precondition-failed:finiteGlobalDimension"},
        {"*": "trivial: local commutative Frobenius algebra; L has the periodic resolution A -> A -> L",
         "quasiHereditary": "trivial: End(Delta(1)) = A is not a division ring"},
    ),
    ZooEntry(
        "a2-path", "path algebra of 2 -> 1",
        lambda: build_algebra(Quiver(["1", "2"], [("a", "2", "1")])), _chain("1", "2"),
        {"dim": 3, "selfInjective": False, "symmetric": False, "globalDimension": 1,
         "quasiHereditary": True, "projectiveInjective": ["2"], "good": False,
         "doubleCentraliserWithQ": False, "centreDim": 1,
         "tiltingDims": {"1": [1, 0], "2": [1, 1]},
         "serreEquivalence": "precondition-failed:good", "serreTableEqual": True},
        {"*": "hand: P(2) = I(1) has head L(2) and socle L(1); End(P(2)) = k so its commutant is 4-dimensional",
         "tiltingDims": "hand: Delta = P, Nabla simple under 1 < 2, so T(i) = P(i)"},
    ),
    ZooEntry(
        "tri3-natural", "upper triangular 3x3 matrices, order 1 < 2 < 3",
        _tri3, _chain("1", "2", "3"),
        {"dim": 6, "globalDimension": 1, "quasiHereditary": True, "projectiveInjective": ["3"],
         "good": False, "doubleCentraliserWithQ": False,
         "tiltingDims": {"1": [1, 0, 0], "2": [1, 1, 0], "3": [1, 1, 1]},
         "dcTiltingX": ["1", "2", "3"], "serreTableEqual": True},
        {"*": "hand: count of matrix units; hereditary; P(3) = I(1) is the only projective-injective",
         "tiltingDims": "hand: every Delta(i) = P(i) and every Nabla(i) = L(i), so T(i) = P(i)",
         "dcTiltingX": "hand: every T(i) = P(i), so the characteristic tilting module is A itself"},
    ),
    ZooEntry(
        "tri3-reversed", "upper triangular 3x3 matrices, order 3 < 2 < 1",
        _tri3, _chain("3", "2", "1"),
        {"dim": 6, "quasiHereditary": True, "projectiveInjective": ["3"],
         "doubleCentraliserWithQ": False,
         "tiltingDims": {"1": [1, 1, 1], "2": [0, 1, 1], "3": [0, 0, 1]},
         "dcTiltingX": ["1", "2", "3"]},
        {"*": "hand: same algebra as tri3-natural (six matrix units; P(3) = I(1) is the "
              "only projective-injective); under the reversed chain Delta(i) = L(i) and every flag "
              "condition holds",
         "doubleCentraliserWithQ": "hand: Q = P(3) has End(Q) = k, so its commutant End_k(Q) has dim 9, not 6",
         "tiltingDims": "hand: every Delta(i) = L(i) and Nabla(i) = I(i), so T(i) = I(i)",
         "dcTiltingX": "hand: T(i) = I(i) and only I(1) lies in add(Q), so X needs every T(i)"},
    ),
    ZooEntry(
        "sl2-block", "principal block of category O for sl2: a: 1 -> 2, b: 2 -> 1, ab = 0",
        lambda: build_algebra(Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")]), [Relation.of(["a", "b"])]),
        (("2", "1"),),
        {"dim": 5, "selfInjective": False, "symmetric": False, "globalDimension": 2,
         "quasiHereditary": True, "projectiveInjective": ["2"], "good": True,
         "doubleCentraliserWithQ": True, "centreDim": 2,
         "tiltingDims": {"1": [1, 2], "2": [0, 1]}, "ringelDualDim": 5, "dcTiltingX": ["1"],
         "serreEquivalence": [True, True, True], "serreTableEqual": True},
        {"*": "hand: basis e1, e2, a, b, ba; soc P(2) = L(2) spanned by ba; resolutions "
              "P(2) -> P(1) -> L(1) and P(1) -> P(2) -> L(2) extended by hand",
         "tiltingDims": "hand: T(1) = P(2) (the projective-injective), T(2) = Delta(2) = L(2)",
         "dcTiltingX": "hand: T(1) = P(2) is the projective-injective and its commutant has dim 5"},
    ),
    ZooEntry(
        "dualext-a3", "dual extension of the directed chain 3 -> 2 -> 1, natural order",
        lambda: dual_extension(Quiver(["1", "2", "3"], [("a", "3", "2"), ("b", "2", "1")])),
        _chain("1", "2", "3"),
        {"dim": 14, "quasiHereditary": True, "projectiveInjective": [], "dcTiltingX": ["3"],
         "dcTiltingDoubleCentraliser": True},
        {"dim": "hand: nonzero paths are a forward path into j followed by a reversed path out of j: 9 + 4 + 1",
         "dcTiltingX": "hand: X is the sum of T(i) over sources of 3 -> 2 -> 1, and 3 is the only source",
         "quasiHereditary": "literature: dual extensions of directed path algebras are quasi-hereditary (Xi)",
         "projectiveInjective": "hand: each I(j) has simple socle L(j); P(1) and P(2) have socle "
                                "L(1)+L(1), and P(3) (dim 3) differs in dimension from I(1) (dim 6)",
         "dcTiltingDoubleCentraliser": "recomputed: commutant of T(3) has dim 14 = dim A; no independent hand oracle"},
    ),
    ZooEntry(
        "hc-toy", "loop x at 1 with x^2 = 0 and a: 1 -> 2, order 2 < 1",
        lambda: build_algebra(Quiver(["1", "2"], [("x", "1", "1"), ("a", "1", "2")]), [Relation.of(["x", "x"])]),
        (("2", "1"),),
        {"dim": 5, "standardlyStratified": True, "quasiHereditary": False, "properlyStratified": True,
         "globalDimension": _INF, "projectiveInjective": []},
        {"*": "hand: basis e1, e2, x, a, xa; Delta(1) = P(1) has endomorphisms k[x]/(x^2) "
              "while DeltaBar(1) = P(1)/(x) is 2-dimensional; the loop forces infinite global dimension"},
        _properly_not_qh,
    ),
    ZooEntry(
        "nongood", "cyclic Nakayama algebra 1 -> 2 -> 3 -> 1 with radical square zero",
        lambda: build_algebra(Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]),
                              [Relation.of(["a", "b"]), Relation.of(["b", "c"]), Relation.of(["c", "a"])]),
        _chain("1", "2", "3"),
        {"dim": 6, "selfInjective": True, "symmetric": False, "globalDimension": _INF,
         "projectiveInjective": ["1", "2", "3"], "good": True,
         "goodSummands": {"1": False, "2": False, "3": False}, "doubleCentraliserWithQ": True,
         "serreEquivalence": "precondition-failed:finiteGlobalDimension"},
        {"*": "hand: P(i) has head L(i) and socle L(i+1), so the Nakayama permutation is a 3-cycle",
         "good": "hand: the full basic Q = A has socle and head both L(1)+L(2)+L(3)",
         "doubleCentraliserWithQ": "trivial: Q = A"},
        _selfinjective_not_good,
    ),
]

_BY_NAME = {e.name: e for e in _ENTRIES}


def zoo_list() -> list:
    return [e.name for e in _ENTRIES]


def zoo_get(name: str) -> ZooEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownEntry(f"no zoo entry {name!r}; known: {', '.join(zoo_list())}") from None


def pipeline_report(entry: ZooEntry, cap: int = 20) -> dict:
    """Run stratification, tilting, Ringel duality, the Serre checks and the derived table."""
    from .derived import serre_duality_check
    from .modules import simple
    from .predicates import Exceeded, centre, global_dimension, is_selfinjective, is_symmetric
    from .serre import check_double_centraliser, check_serrecoapprox_equivalence, is_good, projective_injective_labels
    from .stratification import StratifiedAlgebra, summary
    from .tilting import dc_tilting, ringel_dual, tilting_data

    alg = entry.algebra
    s = StratifiedAlgebra(alg, entry.order)
    strat = summary(s)
    gd = global_dimension(alg, cap)
    rep = {
        "dim": alg.dim,
        "cartan": alg.cartan_matrix(),
        "selfInjective": is_selfinjective(alg).ok,
        "symmetric": is_symmetric(alg).ok,
        "globalDimension": _INF if isinstance(gd, Exceeded) else gd,
        "standardlyStratified": strat["standardlyStratified"],
        "quasiHereditary": strat["quasiHereditary"],
        "properlyStratified": strat["properlyStratified"],
        "centreDim": centre(alg).dim,
    }
    pi = projective_injective_labels(alg)
    rep["projectiveInjective"] = pi
    if pi:
        rep["good"] = is_good(pi, alg).ok
        rep["goodSummands"] = {v: is_good([v], alg).ok for v in pi}
        rep["doubleCentraliserWithQ"] = check_double_centraliser(alg, pi).ok
        try:
            r = check_serrecoapprox_equivalence(alg, pi, cap)
            rep["serreEquivalence"] = [r["cond_i"], r["cond_ii"], r["cond_iii"]]
        except PreconditionFailed as exc:
            rep["serreEquivalence"] = f"precondition-failed:{exc.hypothesis}"
    if strat["standardlyStratified"]:
        td = tilting_data(s)
        rep["tiltingDims"] = {lam: list(td.modules[lam].dim_vector()) for lam in s.labels}
        rep["ringelDualDim"] = ringel_dual(s)[0].algebra.dim
        dc = dc_tilting(s)
        rep["dcTiltingX"] = dc.x_labels
        rep["dcTiltingDoubleCentraliser"] = dc.double_centraliser.ok
    if not isinstance(gd, Exceeded):
        simples = {v: simple(alg, v) for v in alg.vertices}
        ok = True
        for a in alg.vertices:
            for b in alg.vertices:
                rows = serre_duality_check(alg, simples[a], simples[b], range(-gd, gd + 1), cap)
                ok = ok and all(r[3] for r in rows)
        rep["serreTableEqual"] = ok
    return rep


def zoo_verify(name: str, strict: bool = True) -> dict:
    """Diff the pipeline report of ``name`` against its expected fragment.

    Raises:
        Mismatch: on the first differing field when ``strict``.
    """
    entry = zoo_get(name)
    rep = pipeline_report(entry)
    mismatches = []
    for key, want in entry.expected.items():
        got = rep.get(key)
        if got != want:
            if strict:
                raise Mismatch(name, key, want, got)
            mismatches.append({"field": key, "expected": want, "actual": got})
    return {"name": name, "report": rep, "mismatches": mismatches, "ok": not mismatches}
