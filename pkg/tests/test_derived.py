import pytest

from quiverserre.decomposition import module_iso
from quiverserre.derived import (
    BoundedComplex,
    apply_functor_complex,
    derived_nakayama,
    ext_consistency,
    hom_derived,
    hom_homotopy,
    is_quasi_isomorphism,
    projective_resolution_complex,
    resolution_of,
    serre_duality_check,
    shift,
    stalk,
)
from quiverserre.errors import CapExceeded, PreconditionFailed
from quiverserre.modules import (
    ext_dim,
    hom,
    hom_dim,
    injective,
    projective,
    simple,
)
from quiverserre.predicates import Exceeded, global_dimension
from quiverserre.serre import identity_table, nakayama_table

from conftest import loop_algebra, semisimple


def finite_gd(entry):
    gd = global_dimension(entry.algebra)
    if isinstance(gd, Exceeded):
        pytest.skip("infinite global dimension")
    return entry.algebra, gd


def two_term(sl2):
    """P(1) -> P(2) in degrees 1, 0, the inclusion of P(1) as rad P(2)."""
    p1, p2 = projective(sl2, "1"), projective(sl2, "2")
    f = next(g for g in hom(p1, p2) if not g.is_zero())
    return BoundedComplex(sl2, {1: p1, 0: p2}, {1: f})


# constructions

def test_stalk_homology(sl2):
    m = injective(sl2, "1")
    c = stalk(m, 0)
    assert c.homology_dims() == {0: m.dim_vector()}


def test_shift_stalk(sl2):
    m = simple(sl2, "1")
    assert shift(stalk(m, 0), 1).objects == stalk(m, 1).objects
    c = two_term(sl2)
    assert shift(c, 0).objects == c.objects
    back = shift(shift(c, 3), -3)
    assert back.objects == c.objects
    assert back.differentials[1] == c.differentials[1]


def test_shift_sign(sl2):
    c = two_term(sl2)
    s = shift(c, 1)
    assert s.differentials[2] == c.differentials[1].scale(-1)


def test_two_term_homology(sl2):
    c = two_term(sl2)
    assert c.is_complex()
    assert c.homology_dims() == {0: (0, 1)}


def test_resolution_of_projective_is_itself(sl2):
    p = projective(sl2, "2")
    r = resolution_of(p)
    assert list(r.objects) == [0]
    assert module_iso(r.obj(0), p) is not None


def test_sl2_resolution_of_l1(sl2):
    r = resolution_of(simple(sl2, "1"))
    assert r.labels == {0: ["1"], 1: ["2"], 2: ["1"]}


def test_semisimple_resolution_is_stalk():
    a = semisimple(2)
    r = resolution_of(simple(a, "1"))
    assert list(r.objects) == [0]


def test_resolution_cap():
    a = loop_algebra(2)
    with pytest.raises(CapExceeded):
        projective_resolution_complex(stalk(simple(a, "1"), 0), cap=3)


def test_resolution_of_complex(sl2):
    c = two_term(sl2)
    p, chain = projective_resolution_complex(c)
    assert p.is_complex() and chain.commutes() and is_quasi_isomorphism(chain)


# hom in the homotopy category

def test_hom_homotopy_stalks(sl2):
    p, m = projective(sl2, "2"), injective(sl2, "1")
    assert hom_homotopy(stalk(p, 0), stalk(m, 0), 0) == hom_dim(p, m)


def test_hom_homotopy_out_of_range(sl2):
    r = resolution_of(simple(sl2, "1"))
    assert hom_homotopy(r, stalk(simple(sl2, "1"), 0), -5) == 0
    assert hom_homotopy(r, stalk(simple(sl2, "1"), 0), 7) == 0


def test_two_term_sign_convention(sl2):
    # the two-term complex is quasi-isomorphic to L(2) = P(2)/rad
    c = two_term(sl2)
    l2 = simple(sl2, "2")
    for n in range(3):
        assert hom_homotopy(c, stalk(l2, 0), n) == ext_dim(l2, l2, n)


def test_hom_derived_matches_ext(sl2):
    a, b = simple(sl2, "1"), simple(sl2, "1")
    assert hom_derived(stalk(a, 0), stalk(b, 0), 2) == ext_dim(a, b, 2) == 1


# functors on complexes

def test_identity_functor(sl2):
    r = resolution_of(simple(sl2, "1"))
    assert apply_functor_complex("identity", r) is r
    t = apply_functor_complex(identity_table(sl2), r)
    assert t.homology_dims() == r.homology_dims()


def test_nakayama_on_projective_stalk(entry):
    alg = entry.algebra
    for v in alg.vertices:
        h = apply_functor_complex("nakayama", stalk(projective(alg, v), 0))
        assert module_iso(h.obj(0), injective(alg, v)) is not None


def test_table_functor_agrees_with_nakayama(sl2):
    r = resolution_of(simple(sl2, "1"))
    a = apply_functor_complex("nakayama", r)
    b = apply_functor_complex(nakayama_table(sl2), r)
    assert a.homology_dims() == b.homology_dims()


def test_sl2_derived_nakayama_of_l1(sl2):
    lh = derived_nakayama(stalk(simple(sl2, "1"), 0))
    assert lh.is_complex()
    # Serre functor sends L(1) to L(1)[2] on this block
    assert lh.homology_dims() == {2: (1, 0)}


def test_d_squared_zero(entry):
    alg = entry.algebra
    for v in alg.vertices:
        try:
            r = resolution_of(simple(alg, v), cap=6)
        except CapExceeded:
            continue
        assert r.is_complex()
        assert apply_functor_complex("nakayama", r).is_complex()


def test_quasi_isomorphism_certificate(entry):
    alg = entry.algebra
    for v in alg.vertices:
        for m in (simple(alg, v), injective(alg, v)):
            try:
                p, chain = projective_resolution_complex(stalk(m, 0), cap=6)
            except CapExceeded:
                continue
            assert chain.commutes()
            assert is_quasi_isomorphism(chain)
            assert p.homology_dims() == {0: m.dim_vector()}


def test_ext_consistency(entry):
    alg, _ = finite_gd(entry)
    for lam in alg.vertices:
        for mu in alg.vertices:
            for k, a, b in ext_consistency(simple(alg, lam), simple(alg, mu), 4):
                assert a == b, (lam, mu, k)


# Serre duality

def test_semisimple_serre_table():
    a = semisimple(2)
    rows = serre_duality_check(a, simple(a, "1"), simple(a, "1"), range(-1, 2))
    assert [(n, l, r) for n, l, r, _ in rows] == [(-1, 0, 0), (0, 1, 1), (1, 0, 0)]


def test_sl2_serre_table_all_pairs(sl2):
    for lam in sl2.vertices:
        for mu in sl2.vertices:
            rows = serre_duality_check(sl2, simple(sl2, lam), simple(sl2, mu), range(-2, 3))
            assert all(eq for *_, eq in rows), (lam, mu, rows)


def test_serre_table_every_finite_entry(entry):
    alg, gd = finite_gd(entry)
    for lam in alg.vertices:
        for mu in alg.vertices:
            rows = serre_duality_check(alg, simple(alg, lam), simple(alg, mu), range(-gd, gd + 1))
            assert all(eq for *_, eq in rows)


def test_sl2_serre_table_symmetry(sl2):
    for lam in sl2.vertices:
        for mu in sl2.vertices:
            deg = range(-2, 3)
            lhs = [r[1] for r in serre_duality_check(sl2, simple(sl2, lam), simple(sl2, mu), deg)]
            rhs = [r[2] for r in serre_duality_check(sl2, simple(sl2, mu), simple(sl2, lam), deg)]
            assert lhs == rhs


def test_serre_check_needs_finite_global_dimension():
    a = loop_algebra(2)
    with pytest.raises(PreconditionFailed):
        serre_duality_check(a, simple(a, "1"), simple(a, "1"), [0])
