import json

import pytest

from quiverserre.algebra import (
    Quiver,
    Relation,
    algebra_from_json,
    build_algebra,
    dual_extension,
    opposite,
    radical_power,
)
from quiverserre.errors import MalformedRelation, NonAdmissible, NotDirected
from quiverserre.linalg import Subspace
from quiverserre.predicates import (
    Exceeded,
    central_forms,
    global_dimension,
    gram_matrix,
    is_selfinjective,
    is_symmetric,
)
from quiverserre.presentation import present_endomorphisms
from quiverserre.modules import projective

from conftest import loop_algebra, semisimple


def test_point_algebra():
    a = build_algebra(Quiver(["1"], []))
    assert a.dim == 1


def test_dual_numbers_basis():
    a = loop_algebra(2)
    assert [str(p) for p in a.basis] == ["e1", "x"]


def test_sl2_block_basis(sl2):
    # oracle: paths of length <= 2 are e1, e2, a, b, ab, ba; ab (1 -> 2 -> 1) is killed
    assert sl2.dim == 5
    assert [p.arrows for p in sl2.basis] == [(), (), ("a",), ("b",), ("b", "a")]


def test_loop_without_relations_is_not_admissible():
    with pytest.raises(NonAdmissible):
        build_algebra(Quiver(["1"], [("x", "1", "1")]), length_cap=6)


def test_relation_with_nonparallel_paths_rejected():
    q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    with pytest.raises(MalformedRelation):
        build_algebra(q, [Relation.of((1, ["a"]), (1, ["b"]))])


def test_commutativity_relation():
    # square 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd: paths e*4, a, b, c, d, one length-2 class
    q = Quiver(["1", "2", "3", "4"], [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")])
    a = build_algebra(q, [Relation.of((1, ["a", "b"]), (-1, ["c", "d"]))])
    assert a.dim == 9
    assert a.check_associativity()


def test_opposite_of_sl2(sl2):
    o = opposite(sl2)
    arrows = {a.name: (a.source, a.target) for a in o.quiver.arrows}
    assert arrows == {"a": ("2", "1"), "b": ("1", "2")}
    # relation: b then a, the path 1 -> 2 -> 1 of the opposite quiver
    assert [r.terms for r in o.relations] == [((1, ("b", "a")),)]
    assert o.dim == 5


def test_opposite_involution(entry):
    a = entry.algebra
    assert json.dumps(opposite(opposite(a)).to_json(), sort_keys=True) == json.dumps(a.to_json(), sort_keys=True)


def test_associativity_and_unit(entry):
    a = entry.algebra
    assert a.check_associativity()
    one = a.unit()
    for i in range(a.dim):
        b = a.basis_vector(i)
        assert a.multiply(one, b) == b
        assert a.multiply(b, one) == b


def test_radical_power_multiplicative(entry):
    a = entry.algebra
    for k in range(0, 3):
        for l in range(0, 3):
            rk, rl, rkl = radical_power(a, k), radical_power(a, l), radical_power(a, k + l)
            prods = [a.multiply(x, y) for x in rk.basis for y in rl.basis]
            assert Subspace(a.dim, prods).is_subspace_of(rkl)


def test_radical_power_examples(sl2):
    assert radical_power(sl2, 0).dim == 5
    r2 = radical_power(sl2, 2)
    assert r2.dim == 1
    assert r2.contains(sl2.basis_vector(4))  # the path ba
    dual = loop_algebra(2)
    assert radical_power(dual, 1) == Subspace(2, [(0, 1)])


def test_dual_extension_dimensions():
    # oracle: a nonzero path is a forward path into j followed by a reversed path out of j,
    # so dim = sum_j (#forward paths ending at j)(#reversed paths starting at j)
    a2 = dual_extension(Quiver(["1", "2"], [("al", "2", "1")]))
    assert a2.dim == 2 * 2 + 1
    a3 = dual_extension(Quiver(["1", "2", "3"], [("a", "3", "2"), ("b", "2", "1")]))
    assert a3.dim == 3 * 3 + 2 * 2 + 1
    assert dual_extension(Quiver(["1"], [])).dim == 1


def test_dual_extension_rejects_undirected():
    with pytest.raises(NotDirected):
        dual_extension(Quiver(["1", "2"], [("a", "1", "2")]))


def test_json_round_trip(entry):
    a = entry.algebra
    assert algebra_from_json(json.loads(json.dumps(a.to_json()))) == a


def test_selfinjective_examples(sl2):
    v = is_selfinjective(loop_algebra(2))
    assert v.ok and v.witness["nakayama"] == {"1": "1"}
    assert not is_selfinjective(build_algebra(Quiver(["1", "2"], [("a", "2", "1")]))).ok
    assert not is_selfinjective(sl2).ok


def test_symmetric_examples(sl2):
    v = is_symmetric(loop_algebra(2))
    assert v.ok
    form = v.witness["form"]
    assert form[0] == 0 and form[1] != 0
    assert not is_symmetric(build_algebra(Quiver(["1", "2"], [("a", "2", "1")]))).ok
    end_p2 = present_endomorphisms([projective(sl2, "2")], ["2"]).algebra
    assert end_p2.dim == 2
    assert is_symmetric(end_p2).ok


def test_symmetric_implies_selfinjective_and_certificate(entry):
    a = entry.algebra
    v = is_symmetric(a)
    if v.ok:
        assert is_selfinjective(a).ok
        g = gram_matrix(a, v.witness["form"])
        assert g == g.T
        assert g.is_invertible()


def test_nakayama_cycle_not_symmetric():
    a = build_algebra(Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]),
                      [Relation.of(["a", "b"]), Relation.of(["b", "c"]), Relation.of(["c", "a"])])
    v = is_symmetric(a)
    assert not v.ok and v.witness["certified"]
    # P(1) = span{e1, a} has socle L(2), and so on around the cycle
    assert is_selfinjective(a).witness["nakayama"] == {"1": "2", "2": "3", "3": "1"}


def test_global_dimension_examples(sl2):
    assert global_dimension(semisimple(2)) == 0
    assert global_dimension(build_algebra(Quiver(["1", "2"], [("a", "2", "1")]))) == 1
    assert global_dimension(sl2) == 2
    assert isinstance(global_dimension(loop_algebra(2), cap=6), Exceeded)
