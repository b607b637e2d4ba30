"""Exact computations for bound quiver algebras, stratified algebras and Serre functors."""

__version__ = "0.1.0"

from .algebra import BoundQuiverAlgebra, Quiver, Relation, build_algebra, dual_extension, opposite
from .modules import Representation, ModuleMap, projective, injective, simple, hom, ext_dim
from .stratification import StratOrder, StratifiedAlgebra
from .zoo import zoo_get, zoo_list, zoo_verify

__all__ = [
    "BoundQuiverAlgebra", "Quiver", "Relation", "build_algebra", "dual_extension", "opposite",
    "Representation", "ModuleMap", "projective", "injective", "simple", "hom", "ext_dim",
    "StratOrder", "StratifiedAlgebra", "zoo_get", "zoo_list", "zoo_verify",
]
