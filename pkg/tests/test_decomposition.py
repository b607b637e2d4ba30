import pytest

from quiverserre.algebra import Quiver, build_algebra
from quiverserre.decomposition import (
    basic_part,
    decompose,
    decompose_full,
    is_indecomposable,
    minimal_polynomial,
    module_iso,
)
from quiverserre.errors import NonSplit
from quiverserre.linalg import Matrix
from quiverserre.modules import (
    Representation,
    direct_sum_module,
    identity_map,
    injective,
    projective,
    simple,
)


def kronecker_rotation():
    """Kronecker representation whose endomorphism ring is Q(i)."""
    alg = build_algebra(Quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")]))
    return Representation(alg, {"1": 2, "2": 2},
                          {"a": Matrix.identity(2), "b": Matrix([[0, -1], [1, 0]])})


def test_basic_part_examples(sl2):
    p1, p2 = projective(sl2, "1"), projective(sl2, "2")
    assert module_iso(basic_part(direct_sum_module([p1, p1])), p1) is not None
    assert module_iso(basic_part(p2), p2) is not None
    b = basic_part(direct_sum_module([p2, p2, p2, p1]))
    assert module_iso(b, direct_sum_module([p2, p1])) is not None


def test_module_iso_self_is_identity(sl2):
    m = projective(sl2, "2")
    f = module_iso(m, m)
    assert f is not None and f.is_iso()


def test_iso_fails_on_dimension(sl2):
    assert module_iso(projective(sl2, "1"), simple(sl2, "1")) is None


def test_projectives_indecomposable(entry):
    alg = entry.algebra
    for v in alg.vertices:
        assert is_indecomposable(projective(alg, v))
        assert is_indecomposable(injective(alg, v))


def test_split_summands_are_split(entry):
    alg = entry.algebra
    m = direct_sum_module([projective(alg, v) for v in alg.vertices])
    parts = decompose_full(m)
    assert len(parts) == len(alg.vertices)
    for s in parts:
        assert (s.projection @ s.inclusion) == identity_map(s.module)


def test_multiplicities(sl2):
    p1, l2 = projective(sl2, "1"), simple(sl2, "2")
    parts = decompose(direct_sum_module([l2, p1, l2]))
    assert sorted((m.dim_vector(), k) for m, k in parts) == [((0, 1), 2), ((1, 1), 1)]


def test_minimal_polynomial_nilpotent():
    # x^2 for a single Jordan block of size 2, coefficients low degree first
    assert minimal_polynomial(Matrix([[0, 1], [0, 0]])) == [0, 0, 1]


def test_non_split_endomorphism_ring():
    with pytest.raises(NonSplit):
        is_indecomposable(kronecker_rotation())
