"""Exact Schubert calculus on the flag manifolds of types B, D, G2 and F4.

The package computes, over the integers and with exact rational arithmetic:
divided difference operators, Schubert-basis expansions of polynomials in the
fundamental weights, Chevalley products, Giambelli representatives, structure
constants, the Borel-presentation generator dictionaries for these types, and
the Chow rings of the corresponding complex algebraic groups.
"""

from .chowring import (
    ChowPresentation,
    GradedAbelianGroup,
    IntegerMatrix,
    chow_groups,
    chow_presentation,
    degree2_ideal_stratum,
    presentation_strata,
    smith_normal_form,
    verify_chow,
)
from .errors import (
    FlagcalcError,
    InvalidWordError,
    NonIntegralExpansionError,
    NotARootError,
    NotDivisibleByMultiplierError,
    NotDivisibleError,
    OutOfRangeError,
    ParseError,
    UnsupportedRankError,
)
from .exprparse import parse_polynomial
from .polyring import Polynomial, exact_div_linear, poly_arith, weyl_substitute
from .presentations import (
    BorelPresentation,
    VerificationReport,
    borel_presentation,
    degree2_generator_images,
    gamma_expansion,
    verify_presentations,
)
from .rootdata import (
    CartanType,
    Root,
    RootDatum,
    build_root_datum,
    cartan_type,
    coroot_pairing,
    elem_sym_t,
)
from .schubert import (
    SchubertCalc,
    SchubertExpansion,
    calculus_for,
    chevalley_product,
    delta_w,
    divided_difference,
    giambelli_poly,
    schubert_expand,
    structure_constants,
)
from .weylgroup import WeylElement, WeylGroup

__version__ = "0.1.0"

__all__ = [
    "BorelPresentation",
    "CartanType",
    "ChowPresentation",
    "FlagcalcError",
    "GradedAbelianGroup",
    "IntegerMatrix",
    "InvalidWordError",
    "NonIntegralExpansionError",
    "NotARootError",
    "NotDivisibleByMultiplierError",
    "NotDivisibleError",
    "OutOfRangeError",
    "ParseError",
    "Polynomial",
    "Root",
    "RootDatum",
    "SchubertCalc",
    "SchubertExpansion",
    "UnsupportedRankError",
    "VerificationReport",
    "WeylElement",
    "WeylGroup",
    "borel_presentation",
    "build_root_datum",
    "calculus_for",
    "cartan_type",
    "chevalley_product",
    "chow_groups",
    "chow_presentation",
    "coroot_pairing",
    "degree2_generator_images",
    "degree2_ideal_stratum",
    "delta_w",
    "divided_difference",
    "elem_sym_t",
    "exact_div_linear",
    "gamma_expansion",
    "giambelli_poly",
    "parse_polynomial",
    "poly_arith",
    "presentation_strata",
    "schubert_expand",
    "smith_normal_form",
    "structure_constants",
    "verify_chow",
    "verify_presentations",
    "weyl_substitute",
]
