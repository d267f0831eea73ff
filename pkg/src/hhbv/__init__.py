"""Exact computation of the BV structure on the Hochschild cohomology of the
quaternion-type algebra R(2,0,d) in characteristic 2.

Scalars live in GF(2)[d] (:mod:`hhbv.coeff`); the algebra, its resolutions,
the comparison maps and the cohomology operations are in the submodules
``algebra``, ``resolution``, ``comparison``, ``bv`` and ``catalog``.
"""

from .algebra import AlgElem, WORDS, bilinear_form, dual_basis, mul, normal_form
from .bv import Cochain, cup, delta, gerstenhaber_bracket, is_coboundary
from .catalog import GENERATORS, evaluate, generator

__all__ = [
    "AlgElem", "WORDS", "bilinear_form", "dual_basis", "mul", "normal_form",
    "Cochain", "cup", "delta", "gerstenhaber_bracket", "is_coboundary",
    "GENERATORS", "evaluate", "generator",
]

__version__ = "0.1.0"
