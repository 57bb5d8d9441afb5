"""Polynomial algebra over CycNum: univariate, binary and multivariate."""

from .binary import (
    BinaryForm,
    GroupElt2,
    act,
    act_matrix,
    act_pointed,
    act_symbolic,
    factor_linear,
    gcd_forms,
    gcd_many,
    proj_eq,
)
from .multipoly import MultiPoly, poly_vars
from .roots import field_roots
from .unipoly import UniPoly, interpolate, poly_gcd, resultant, sylvester_matrix

__all__ = [
    "BinaryForm",
    "GroupElt2",
    "MultiPoly",
    "UniPoly",
    "act",
    "act_matrix",
    "act_pointed",
    "act_symbolic",
    "factor_linear",
    "field_roots",
    "gcd_forms",
    "gcd_many",
    "interpolate",
    "poly_gcd",
    "poly_vars",
    "proj_eq",
    "resultant",
    "sylvester_matrix",
]
