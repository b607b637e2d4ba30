"""Exact linear algebra over the rationals."""

from . import kernels
from .matrix import (
    Matrix,
    Subspace,
    block_diagonal,
    block_matrix,
    find_nonsingular,
    image,
    kernel,
    linear_combination,
    q,
    rational_str,
    rref,
    rref_rows,
    sample_points,
    solve,
)

__all__ = [
    "Matrix",
    "Subspace",
    "block_diagonal",
    "block_matrix",
    "find_nonsingular",
    "image",
    "kernel",
    "kernels",
    "linear_combination",
    "q",
    "rational_str",
    "rref",
    "rref_rows",
    "sample_points",
    "solve",
]
