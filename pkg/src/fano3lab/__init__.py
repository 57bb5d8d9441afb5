"""Exact computations on Fano threefolds of Picard rank one.

Subpackages and modules:

- ``exactfield``: cyclotomic numbers with exact arithmetic
- ``polyalg``: univariate, binary and multivariate polynomials, roots in the field
- ``v5``: points and lines of the quintic del Pezzo threefold
- ``quintics``, ``planecurves``: special rational quintics and their plane curves of lines
- ``autgrp``: finite subgroups of PGL2 and automorphisms of the special curves
- ``fanodb``: classification tables and numerical calculators
- ``linalgeom``: Pfaffians, isotropic subspaces, pencils of quadrics
"""

from .errors import Fano3LabError
from .exactfield import DEFAULT_CONDUCTOR, CycNum, as_cyc, zeta
from .polyalg import BinaryForm, GroupElt2, MultiPoly, UniPoly

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONDUCTOR",
    "BinaryForm",
    "CycNum",
    "Fano3LabError",
    "GroupElt2",
    "MultiPoly",
    "UniPoly",
    "as_cyc",
    "zeta",
]
