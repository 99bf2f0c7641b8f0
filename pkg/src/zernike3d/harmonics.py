"""Vector harmonics r^l Y_l^(m) and 3D Zernike functions in Cartesian form.

All outputs carry a factor sqrt(pi): ``ylm_cart`` returns sqrt(pi) r^l Y_l^(m) and
``zernike3d_to_cart`` returns sqrt(pi) Z_{n,l}^(m). Y follows Edmonds' phase,
Y_l^(m)* = (-1)^m Y_l^(-m).
"""

from fractions import Fraction
from math import factorial

from ..exact.poly import CartPoly3, ZernExpansion3D, trinomial_expand
from ..exact.special import binomial, double_factorial, sign
from ..exact.surd import ComplexSurd, SurdSum
from ..shared.cache import memoized
from ..types import Index3D, SphIndex
from .radial import radial_3d


@memoized("ylm_cart")
def _ylm_cart_nonneg(l: int, m: int) -> CartPoly3:
    norm = SurdSum.sqrt((2 * l + 1) * factorial(l - m) * factorial(l + m), Fraction(1, 2))
    lead = Fraction(-1, 2) ** m
    coeffs = {}
    for s1 in range((l - m) // 2 + 1):
        for s2 in range((l - m) // 2 - s1 + 1):
            s = s1 + s2
            weight = lead * Fraction(-1, 4) ** s / (
                factorial(s1) * factorial(s2) * factorial(m + s) * factorial(l - m - 2 * s)
            )
            for k in range(m + 1):
                c = weight * sign(k // 2) * binomial(m, k)
                part = ComplexSurd(0, c) if k % 2 else ComplexSurd(c)
                key = (m - k + 2 * s1, k + 2 * s2, l - m - 2 * s)
                coeffs[key] = coeffs[key] + part if key in coeffs else part
    return CartPoly3(coeffs).scale(norm)


def ylm_cart(idx: SphIndex) -> CartPoly3:
    """
    sqrt(pi) r^l Y_l^(m) as a homogeneous polynomial of degree l.

    Args:
        idx: (l, m); negative m through Y_l^(-m) = (-1)^m Y_l^(m)*

    Returns:
        CartPoly3 with complex coefficients
    """
    if idx.m >= 0:
        return _ylm_cart_nonneg(idx.l, idx.m)
    return _ylm_cart_nonneg(idx.l, -idx.m).conj().scale(sign(idx.m))


def zernike3d_to_cart(n: int, l: int, m: int) -> CartPoly3:
    """
    sqrt(pi) Z_{n,l}^(m) = R_n^(l)(r) sqrt(pi) Y_l^(m) in x, y, z.

    Powers r^(e-l) of the radial polynomial become trinomials (x^2+y^2+z^2)^((e-l)/2).

    Args:
        n: Radial order
        l: Angular order, n - l even
        m: Azimuthal order, |m| <= l

    Returns:
        CartPoly3
    """
    idx = Index3D(n, l)
    harmonic = ylm_cart(SphIndex(l, m))
    out = CartPoly3()
    for e, c in radial_3d(idx).items():
        out = out + (trinomial_expand((e - l) // 2) * harmonic).scale(c)
    return out


def expansion_to_cart_3d(expansion: ZernExpansion3D) -> CartPoly3:
    """Sum u * sqrt(pi) Z_{n,l}^(m) over an expansion."""
    out = CartPoly3()
    for (n, l, m), c in expansion.items():
        out = out + zernike3d_to_cart(n, l, m).scale(c)
    return out


def ball_monomial_integral(a: int, b: int, c: int) -> Fraction:
    """Integral of x^a y^b z^c over the unit ball, in units of pi."""
    if a % 2 or b % 2 or c % 2:
        return Fraction(0)
    num = 4 * double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1)
    return Fraction(num, double_factorial(a + b + c + 1) * (a + b + c + 3))


def disk_monomial_integral(a: int, b: int) -> Fraction:
    """Integral of x^a y^b over the unit disk, in units of pi."""
    if a % 2 or b % 2:
        return Fraction(0)
    num = 2 * double_factorial(a - 1) * double_factorial(b - 1)
    return Fraction(num, double_factorial(a + b) * (a + b + 2))


def ball_integral(poly: CartPoly3) -> ComplexSurd:
    """Integral of a Cartesian polynomial over the unit ball, in units of pi."""
    total = ComplexSurd()
    for (a, b, c), coeff in poly.items():
        weight = ball_monomial_integral(a, b, c)
        if weight:
            total = total + coeff * weight
    return total
