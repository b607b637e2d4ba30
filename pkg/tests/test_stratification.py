import pytest

from quiverserre.decomposition import module_iso
from quiverserre.modules import (
    dualize,
    ext_dim,
    head,
    injective,
    projective,
    radical,
    simple,
    socle_labels,
    submodule_of,
)
from quiverserre.stratification import (
    StratifiedAlgebra,
    StratOrder,
    has_flag,
    is_properly_stratified,
    is_quasi_hereditary,
    is_standardly_stratified,
    order_from_json,
)

from conftest import semisimple, strat_of


def corpus_strat(entry):
    return StratifiedAlgebra(entry.algebra, entry.order)


# orders

def test_order_closure_and_strictness():
    o = StratOrder(["1", "2", "3"], [("1", "2"), ("2", "3")])
    assert o.le("1", "3")
    assert o.lt("1", "2") and not o.lt("2", "1")
    assert o.is_antisymmetric()


def test_preorder_classes():
    o = StratOrder(["1", "2", "3"], [("1", "2"), ("2", "1"), ("2", "3")])
    assert not o.is_antisymmetric()
    assert not o.lt("1", "2")
    assert o.lt("1", "3")


def test_order_json_round_trip():
    o = StratOrder.chain(["1", "2", "3"])
    assert order_from_json(["1", "2", "3"], o.to_json()) == o


# standard modules

def test_maximal_label_delta_is_projective(entry):
    s = corpus_strat(entry)
    for lam in s.labels:
        if not s.order.strictly_above(lam):
            assert s.delta(lam) == projective(s.algebra, lam)


def test_semisimple_discrete():
    a = semisimple(2)
    s = StratifiedAlgebra(a, StratOrder.discrete(a.vertices))
    for lam in a.vertices:
        assert s.delta(lam).total_dim == 1
        assert s.nabla(lam).total_dim == 1
        assert s.delta_bar(lam).total_dim == 1
    assert is_standardly_stratified(s)


def test_sl2_fixture_standard_modules(sl2_strat):
    # order 2 <= 1: Delta(1) = P(1); trace of P(1) in P(2) is rad P(2)
    assert sl2_strat.delta("1").dim_vector() == (1, 1)
    assert sl2_strat.delta("2").dim_vector() == (0, 1)


def test_sl2_exactly_one_order_passes(sl2):
    fixture = StratifiedAlgebra(sl2, StratOrder(sl2.vertices, [("2", "1")]))
    other = StratifiedAlgebra(sl2, StratOrder(sl2.vertices, [("1", "2")]))
    assert is_quasi_hereditary(fixture)
    assert not is_standardly_stratified(other)


def test_sl2_costandard(sl2_strat):
    n1 = sl2_strat.nabla("1")
    assert n1.total_dim == 2
    assert socle_labels(n1) == [("1", 1)]
    assert module_iso(n1, injective(sl2_strat.algebra, "1")) is not None


def test_single_class_preorder_delta_bar_is_simple(entry):
    # every label equivalent: P^{>=lam} is all of A, so its trace covers rad P(lam)
    alg = entry.algebra
    vs = alg.vertices
    s = StratifiedAlgebra(alg, StratOrder(vs, [(u, v) for u in vs for v in vs]))
    for lam in vs:
        assert s.delta_bar(lam).total_dim == 1
        assert s.delta(lam) == projective(alg, lam)


def test_discrete_order_delta_bar_on_directed(entry):
    # discrete order: only P(lam) itself is traced into rad P(lam); with no
    # cycles through lam that trace is zero, so the quotient is all of P(lam)
    alg = entry.algebra
    if any(p.source == p.target and p.arrows for p in alg.basis):
        pytest.skip("has oriented cycles")
    s = StratifiedAlgebra(alg, StratOrder.discrete(alg.vertices))
    for lam in alg.vertices:
        assert s.delta_bar(lam) == projective(alg, lam)


def test_qh_delta_bar_equals_delta(entry):
    s = corpus_strat(entry)
    if not is_quasi_hereditary(s):
        pytest.skip("not quasi-hereditary")
    for lam in s.labels:
        assert s.delta_bar(lam) == s.delta(lam)


def test_hc_toy_delta_bar_differs():
    s = strat_of("hc-toy")
    assert any(s.delta_bar(lam).total_dim != s.delta(lam).total_dim for lam in s.labels)
    assert is_properly_stratified(s)
    assert not is_quasi_hereditary(s)


def test_upper_triangular_chain_is_qh():
    assert is_quasi_hereditary(strat_of("tri3-natural"))


def test_a2_discrete_order_fails_with_witness():
    s = strat_of("a2-path")
    d = StratifiedAlgebra(s.algebra, StratOrder.discrete(s.labels))
    v = is_standardly_stratified(d)
    assert not v
    assert v.witness["label"] == "2" and v.witness["condition"] == "b"


def test_nongood_fixture_not_stratified():
    assert not is_standardly_stratified(strat_of("nongood"))


# flags

def test_delta_has_trivial_flag(entry):
    s = corpus_strat(entry)
    for lam in s.labels:
        assert has_flag(s, s.delta(lam), cross_check=False).labels == [lam]


def test_sl2_projective_flags(sl2_strat):
    a = sl2_strat.algebra
    assert has_flag(sl2_strat, projective(a, "1")).labels == ["1"]
    # P(2) has Delta(1) = P(1) as submodule and Delta(2) = L(2) on top
    assert has_flag(sl2_strat, projective(a, "2")).labels == ["1", "2"]


def test_non_maximal_simple_has_no_flag(sl2_strat):
    l1 = simple(sl2_strat.algebra, "1")
    assert has_flag(sl2_strat, l1) is None
    assert any(ext_dim(l1, sl2_strat.nabla_bar(mu), 1) for mu in sl2_strat.labels)


def test_nabla_flag_of_injectives(sl2_strat):
    a = sl2_strat.algebra
    for lam in sl2_strat.labels:
        assert has_flag(sl2_strat, injective(a, lam), "Nabla") is not None


def test_unknown_family():
    s = strat_of("point")
    with pytest.raises(ValueError):
        has_flag(s, s.delta("1"), "Sigma")


# properties over the corpus

def test_heads_of_standard_modules(entry):
    s = corpus_strat(entry)
    for lam in s.labels:
        assert head(s.delta(lam)) == [(lam, 1)]
        assert head(s.delta_bar(lam)) == [(lam, 1)]


def test_composition_factor_bound(entry):
    s = corpus_strat(entry)
    for lam in s.labels:
        for mu, n in s.delta(lam).dims.items():
            if n:
                assert not s.order.lt(lam, mu)
        rad, _ = submodule_of(s.delta_bar(lam), radical(s.delta_bar(lam)))
        for mu, n in rad.dims.items():
            if n:
                assert not s.order.le(lam, mu)


def test_nabla_is_dual_of_opposite_delta(entry):
    s = corpus_strat(entry)
    op = s.opposite()
    for lam in s.labels:
        d = dualize(op.delta(lam))
        n = s.nabla(lam)
        assert d.total_dim == n.total_dim
        assert socle_labels(d) == socle_labels(n) == [(lam, 1)]


def test_flag_criterion_equivalence(entry):
    s = corpus_strat(entry)
    if not is_standardly_stratified(s):
        pytest.skip("not standardly stratified")
    alg = s.algebra
    mods = []
    for v in alg.vertices:
        mods += [projective(alg, v), injective(alg, v), simple(alg, v), s.delta(v), s.nabla(v)]
    for m in mods:
        constructive = has_flag(s, m, cross_check=False) is not None
        homological = all(ext_dim(m, s.nabla_bar(mu), 1) == 0 for mu in s.labels)
        assert constructive == homological


def test_bgg_count(entry):
    s = corpus_strat(entry)
    if not is_quasi_hereditary(s):
        pytest.skip("not quasi-hereditary")
    for mu in s.labels:
        p = projective(s.algebra, mu)
        cert = has_flag(s, p)
        assert cert is not None
        assert sum(s.delta(lam).total_dim for lam in cert.labels) == p.total_dim
