"""Exact field and polynomial arithmetic."""
from .fields import QQ, GF, GF2, Fp, Fp2, PrimeField, QuadraticExtension, field_of
from .poly import (Poly, PolyRing, det, det_generic, discriminant, gcd, interpolate,
                   poly_sqrt, resultant, sylvester)
from .radical import CubicRadicalAlgebra, RadicalElem
from .degree import DegreeBound, DegreeRing

__all__ = [
    "QQ", "GF", "GF2", "Fp", "Fp2", "PrimeField", "QuadraticExtension", "field_of",
    "Poly", "PolyRing", "det", "det_generic", "discriminant", "gcd", "interpolate",
    "poly_sqrt", "resultant", "sylvester",
    "CubicRadicalAlgebra", "RadicalElem", "DegreeBound", "DegreeRing",
]
