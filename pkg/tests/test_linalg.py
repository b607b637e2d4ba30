from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverserre.linalg import (
    Matrix,
    Subspace,
    find_nonsingular,
    image,
    kernel,
    kernels,
    rref,
    solve,
)

small_int = st.integers(min_value=-6, max_value=6)


@st.composite
def matrices(draw, max_rows=6, max_cols=6, entries=small_int):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = [[draw(entries) for _ in range(c)] for _ in range(r)]
    return Matrix(rows, r, c)


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def test_rref_hand_example():
    m = Matrix([[2, 4, 6], [1, 2, 4]])
    red, piv = rref(m)
    assert piv == [0, 2]
    assert red.rows == ((1, 2, 0), (0, 0, 1))


def test_kernel_of_singular_matrix():
    k = kernel(Matrix([[1, 2], [2, 4]]))
    assert k.dim == 1
    assert k.contains((-2, 1))


def test_inverse_exact():
    m = Matrix([[2, 1], [1, 1]])
    assert m.inverse() == Matrix([[1, -1], [-1, 2]])
    assert Matrix([[Fraction(1, 3)]]).inverse() == Matrix([[3]])


def test_solve_inconsistent_returns_none():
    assert solve(Matrix([[1, 1], [1, 1]]), Matrix([[1], [2]])) is None


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    red, piv = rref(m)
    red2, piv2 = rref(red)
    assert red2 == red and piv2 == piv


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    _, piv = rref(m)
    assert kernel(m).dim + len(piv) == m.ncols


@settings(max_examples=60, deadline=None)
@given(matrices(entries=fractions))
def test_kernel_vectors_are_killed(m):
    for v in kernel(m).basis:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_exact_for_consistent_systems(m, data):
    x = Matrix([[data.draw(small_int)] for _ in range(m.ncols)], m.ncols, 1)
    rhs = m @ x
    sol = solve(m, rhs)
    assert sol is not None
    assert m @ sol == rhs


@settings(max_examples=40, deadline=None)
@given(matrices(max_rows=4, max_cols=5), st.data())
def test_subspace_canonical_form(m, data):
    s = Subspace(m.ncols, m.rows)
    # same span from shuffled, rescaled and combined generators
    gens = [tuple(2 * x for x in r) for r in reversed(m.rows)]
    if len(gens) > 1:
        gens.append(tuple(a + b for a, b in zip(gens[0], gens[1])))
    t = Subspace(m.ncols, gens)
    assert s == t
    assert s.basis == t.basis


@settings(max_examples=40, deadline=None)
@given(matrices(max_rows=4, max_cols=5), matrices(max_rows=4, max_cols=5))
def test_sum_intersection_dimension(a, b):
    if a.ncols != b.ncols:
        return
    s, t = Subspace(a.ncols, a.rows), Subspace(b.ncols, b.rows)
    assert (s + t).dim + s.intersection(t).dim == s.dim + t.dim
    assert s.intersection(t).is_subspace_of(s)


@settings(max_examples=40, deadline=None)
@given(matrices(max_rows=5, max_cols=5))
def test_image_dimension_is_rank(m):
    assert image(m).dim == m.rank()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(-10 ** 12, 10 ** 12), min_size=5, max_size=5), min_size=1, max_size=6))
def test_backends_agree(rows):
    if kernels.compiled_rref_integer is None:
        pytest.skip("compiled kernel not built")
    a = kernels.python_rref_integer([list(r) for r in rows], 5)
    b = kernels.compiled_rref_integer([list(r) for r in rows], 5)
    assert [list(r) for r in a[0]] == [list(r) for r in b[0]]
    assert list(a[1]) == list(b[1])


def test_backend_switch_roundtrip():
    before = kernels.BACKEND
    kernels.use_backend("python")
    try:
        assert kernel(Matrix([[1, 1]])).dim == 1
    finally:
        kernels.use_backend(before)
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_find_nonsingular_positive_and_certified_negative():
    e11 = Matrix([[1, 0], [0, 0]])
    e22 = Matrix([[0, 0], [0, 1]])
    c, cert = find_nonsingular([[e11, e22]])
    assert c is not None and cert
    assert (e11.scale(c[0]) + e22.scale(c[1])).is_invertible()
    # nilpotent family: never invertible, proved symbolically
    n = Matrix([[0, 1], [0, 0]])
    c, cert = find_nonsingular([[n, n.scale(2)]])
    assert c is None and cert
