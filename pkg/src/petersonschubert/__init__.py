"""Equivariant Schubert calculus on Peterson varieties for all finite Lie types."""

from .billey import (
    HeightList, RootPolynomial, TMonomial, billey_polynomial, billey_specialized,
    heights_list, root_at, specialize,
)
from .peterson import (
    basis_table, fixed_points, giambelli, localization, monk, scan_nonintegral, v_of,
)
from .roots import LieType, RootSystem, build_root_system, classify_subset
from .weyl import (
    all_reduced_words, bruhat_leq, element_of, length, longest_element,
)

__all__ = [
    "HeightList", "RootPolynomial", "TMonomial", "billey_polynomial", "billey_specialized",
    "heights_list", "root_at", "specialize",
    "basis_table", "fixed_points", "giambelli", "localization", "monk", "scan_nonintegral",
    "v_of",
    "LieType", "RootSystem", "build_root_system", "classify_subset",
    "all_reduced_words", "bruhat_leq", "element_of", "length", "longest_element",
]

__version__ = "0.1.0"
