"""Exact arithmetic: surds, complex surds and sparse polynomials."""

from .poly import (
    CartPoly2,
    CartPoly3,
    RadialPoly,
    ZernExpansion2D,
    ZernExpansion3D,
    poly_add,
    poly_mul,
    poly_scale,
    trinomial_expand,
)
from .surd import (
    ComplexSurd,
    Rational,
    SurdSum,
    complex_conj,
    complex_mul,
    normalize_radicand,
    surd_add,
    surd_mul,
    surd_neg,
    surd_to_float,
)

__all__ = [
    "CartPoly2",
    "CartPoly3",
    "ComplexSurd",
    "RadialPoly",
    "Rational",
    "SurdSum",
    "ZernExpansion2D",
    "ZernExpansion3D",
    "complex_conj",
    "complex_mul",
    "normalize_radicand",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "surd_add",
    "surd_mul",
    "surd_neg",
    "surd_to_float",
    "trinomial_expand",
]
