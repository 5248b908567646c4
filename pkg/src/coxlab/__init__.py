"""Exact Coxeter polynomials of finite dimensional algebras and related spectral tools."""
from .algebras import (
    Canonical, CartanBasis, ExtendedCanonical, Ladder, LinearWithRelations, MonomialAlgebra,
    PathAlgebra, PosetAlgebra, Quiver, Star, Supercanonical, algebra_from_dict, algebra_from_json,
    cartan_matrix, x3_linear,
)
from .catalog import (
    DerivedType, canonical_poly, classify_poly, extended_canonical_poly, star_poly, supercanonical_poly,
)
from .coxeter import coxeter_matrix, coxeter_polynomial, spectral_class, spectral_radius_numeric
from .errors import CoxlabError
from .exactmath import IntMatrix, IntPoly, RatFunc, cyclotomic, cyclotomic_factor, v_poly

__version__ = "0.1.0"

__all__ = [
    "Canonical", "CartanBasis", "ExtendedCanonical", "Ladder", "LinearWithRelations", "MonomialAlgebra",
    "PathAlgebra", "PosetAlgebra", "Quiver", "Star", "Supercanonical", "algebra_from_dict",
    "algebra_from_json", "cartan_matrix", "x3_linear", "DerivedType", "canonical_poly", "classify_poly",
    "extended_canonical_poly", "star_poly", "supercanonical_poly", "coxeter_matrix", "coxeter_polynomial",
    "spectral_class", "spectral_radius_numeric", "CoxlabError", "IntMatrix", "IntPoly", "RatFunc",
    "cyclotomic", "cyclotomic_factor", "v_poly",
]
