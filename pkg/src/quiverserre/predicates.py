"""Algebra-level predicates: self-injectivity, symmetry, global dimension, centre."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .algebra import BoundQuiverAlgebra
from .decomposition import module_iso
from .linalg import Matrix, Subspace, find_nonsingular, kernel, linear_combination
from .modules import injective, projective, projective_dimension, simple, socle_labels


@dataclass
class Verdict:
    """A boolean answer with supporting data."""

    ok: bool
    witness: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Exceeded:
    """Returned by :func:`global_dimension` when some resolution is still nonzero at the cap."""

    cap: int

    def __str__(self) -> str:
        return f">{self.cap}"


def is_selfinjective(alg: BoundQuiverAlgebra) -> Verdict:
    """True iff each ``P(lam)`` is isomorphic to ``I(nu(lam))``; the witness holds ``nu``."""
    nu = {}
    for lam in alg.vertices:
        p = projective(alg, lam)
        soc = socle_labels(p)
        if len(soc) != 1 or soc[0][1] != 1:
            return Verdict(False, {"label": lam, "reason": "socle of P is not simple"})
        mu = soc[0][0]
        if module_iso(p, injective(alg, mu)) is None:
            return Verdict(False, {"label": lam, "reason": "P is not injective"})
        nu[lam] = mu
    return Verdict(True, {"nakayama": nu})


def central_forms(alg: BoundQuiverAlgebra) -> Subspace:
    """Linear forms ``f`` with ``f(b_i b_j) = f(b_j b_i)`` for all basis pairs."""
    n = alg.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            row = [0] * n
            for k, c in alg.product(i, j).items():
                row[k] += c
            for k, c in alg.product(j, i).items():
                row[k] -= c
            if any(row):
                rows.append(row)
    if not rows:
        return Subspace.full(n)
    return kernel(Matrix(rows, len(rows), n))


def gram_matrix(alg: BoundQuiverAlgebra, f) -> Matrix:
    n = alg.dim
    return Matrix([[sum(c * f[k] for k, c in alg.product(i, j).items()) for j in range(n)]
                   for i in range(n)], n, n)


def is_symmetric(alg: BoundQuiverAlgebra, require_selfinjective: bool = True) -> Verdict:
    """True iff some central form has an invertible Gram matrix; the witness holds the form.

    Non-self-injective algebras are rejected first (symmetric implies self-injective),
    which keeps the determinant search small.
    """
    if require_selfinjective and not is_selfinjective(alg):
        return Verdict(False, {"reason": "not self-injective", "certified": True})
    z = central_forms(alg)
    if z.dim == 0:
        return Verdict(False, {"reason": "no central forms", "certified": True})
    grams = [gram_matrix(alg, f) for f in z.basis]
    coeffs, certified = find_nonsingular([grams], symbolic_limit=12 if alg.dim <= 12 else 0)
    if coeffs is None:
        return Verdict(False, {"reason": "every central form is degenerate", "certified": certified,
                               "centralForms": z.dim})
    form = tuple(sum(c * f[k] for c, f in zip(coeffs, z.basis)) for k in range(alg.dim))
    return Verdict(True, {"form": form, "certified": True})


def global_dimension(alg: BoundQuiverAlgebra, cap: int = 20) -> Union[int, Exceeded]:
    best = 0
    for lam in alg.vertices:
        d = projective_dimension(simple(alg, lam), cap)
        if d is None:
            return Exceeded(cap)
        best = max(best, d)
    return best


def centre(alg: BoundQuiverAlgebra) -> Subspace:
    """``Z(A) = {z : b z = z b for all basis elements b}``."""
    n = alg.dim
    rows = []
    for i in range(n):
        block = [[0] * n for _ in range(n)]
        for k in range(n):
            for m, c in alg.product(i, k).items():
                block[m][k] += c
            for m, c in alg.product(k, i).items():
                block[m][k] -= c
        rows.extend(r for r in block if any(r))
    if not rows:
        return Subspace.full(n)
    return kernel(Matrix(rows, len(rows), n))
