"""Linearization of products of circle functions."""

from fractions import Fraction
from typing import Dict, List, Tuple

from ..exact.special import binomial, sign
from ..types import AngularKind, Index2D
from ..utils.errors import InvalidArgumentError
from .radial import power_to_radial_2d, radial_2d


def g_coeff(idx1: Index2D, idx2: Index2D, idx3: Index2D) -> Fraction:
    """
    g = 2(n3+1) * integral_0^1 r R1 R2 R3 dr via the direct triple sum.

    Args:
        idx1: First factor
        idx2: Second factor
        idx3: Target radial polynomial

    Returns:
        Rational linearization coefficient
    """
    if (idx1.n + idx2.n - idx3.n) % 2:
        raise InvalidArgumentError(
            "n1 + n2 - n3 must be even", {"n1": idx1.n, "n2": idx2.n, "n3": idx3.n}
        )
    factors = []
    for idx in (idx1, idx2, idx3):
        half = idx.half
        factors.append(
            [
                sign(s) * binomial(idx.n - s, s) * binomial(idx.n - 2 * s, half - s)
                for s in range(half + 1)
            ]
        )
    n_sum = idx1.n + idx2.n + idx3.n
    total = Fraction(0)
    for s1, c1 in enumerate(factors[0]):
        for s2, c2 in enumerate(factors[1]):
            for s3, c3 in enumerate(factors[2]):
                total += Fraction(c1 * c2 * c3, n_sum + 2 * (1 - s1 - s2 - s3))
    return 2 * (idx3.n + 1) * total


def _coupled_orders(idx1: Index2D, idx2: Index2D) -> Tuple[int, int]:
    return abs(idx1.m - idx2.m), idx1.m + idx2.m


def _check_m3(idx1: Index2D, idx2: Index2D, m3: int) -> None:
    if m3 not in _coupled_orders(idx1, idx2):
        raise InvalidArgumentError(
            "m3 must be |m1 - m2| or m1 + m2", {"m1": idx1.m, "m2": idx2.m, "m3": m3}
        )


def product_expand_2d(idx1: Index2D, idx2: Index2D, m3: int) -> Dict[int, Fraction]:
    """R_{n1}^{m1} R_{n2}^{m2} = sum over n3 of g R_{n3}^{m3}; zero terms omitted."""
    _check_m3(idx1, idx2, m3)
    out = {}
    for n3 in range(m3, idx1.n + idx2.n + 1, 2):
        g = g_coeff(idx1, idx2, Index2D(n3, m3))
        if g:
            out[n3] = g
    return out


def g_via_linear_system(idx1: Index2D, idx2: Index2D, m3: int) -> Dict[int, Fraction]:
    """
    Same expansion as product_expand_2d, by matching powers of r.

    The product polynomial is re-expanded power by power with the h
    coefficients, which is the triangular solve written out.
    """
    _check_m3(idx1, idx2, m3)
    product = radial_2d(idx1) * radial_2d(idx2)
    acc: Dict[int, Fraction] = {}
    for e, c in product.items():
        coeff = c.as_rational()
        for n3, h in power_to_radial_2d(e, m3).items():
            acc[n3] = acc.get(n3, Fraction(0)) + coeff * h
    return {n3: v for n3, v in sorted(acc.items()) if v}


def angular_product(k1: AngularKind, k2: AngularKind) -> List[Tuple[AngularKind, Fraction]]:
    """
    Product-to-sum of two azimuthal factors.

    Args:
        k1: First factor (radial counts as cos(0))
        k2: Second factor

    Returns:
        Terms (kind, coefficient), difference order first; equal kinds merged
    """
    if k1.kind == "cos" or k1.kind == "radial":
        if k2.kind == "sin":
            return angular_product(k2, k1)
    half = Fraction(1, 2)
    m1, m2 = k1.m, k2.m
    raw: List[Tuple[str, int, Fraction]] = []
    if k1.kind == "sin" and k2.kind == "sin":
        raw = [("cos", m1 - m2, half), ("cos", m1 + m2, -half)]
    elif k1.kind == "sin":
        raw = [("sin", m1 - m2, half), ("sin", m1 + m2, half)]
    else:
        raw = [("cos", m1 - m2, half), ("cos", m1 + m2, half)]

    merged: Dict[AngularKind, Fraction] = {}
    order: List[AngularKind] = []
    for name, m, c in raw:
        if name == "sin":
            if m == 0:
                continue
            kind, c = AngularKind.sin(abs(m)), c * (1 if m > 0 else -1)
        else:
            kind = AngularKind.cos(abs(m))
        if kind not in merged:
            order.append(kind)
            merged[kind] = Fraction(0)
        merged[kind] += c
    return [(kind, merged[kind]) for kind in order if merged[kind]]
