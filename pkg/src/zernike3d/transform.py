"""Cartesian monomials projected onto 3D Zernike functions (the u coefficients).

Values follow the sqrt(pi)-factored convention of ``harmonics``: ``u_coeff``
returns the coefficient in x^p y^q z^t / sqrt(pi) = sum u Z_{n,l}^(m).
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Dict, Tuple

from ..exact.poly import CartPoly3, ZernExpansion3D
from ..exact.special import binomial, gbinomial, pochhammer, sign
from ..exact.surd import ComplexSurd, SurdSum
from ..types import Index3D
from .harmonics import ball_integral, zernike3d_to_cart
from .radial import f_coeff, radial_3d

logger = logging.getLogger(__name__)


def I_r(j: int, n: int, l: int) -> SurdSum:
    """Integral of r^(j+2) R_n^(l)(r) over [0, 1]; f_{j,n,l} where defined."""
    if (j - l) % 2 or (n - l) % 2:
        return SurdSum()
    idx = Index3D(n, l)
    if n > j >= l:
        # r^j lies in the span of R_l .. R_j, orthogonal to R_n
        return SurdSum()
    if j < l:
        return radial_3d(idx).weighted_integral(j + 2)
    return f_coeff(j, idx)


def _i_power(q: int) -> Tuple[int, int]:
    """i**q as (re, im)."""
    return [(1, 0), (0, 1), (-1, 0), (0, -1)][q % 4]


def I_phi(p: int, q: int, m: int) -> ComplexSurd:
    """
    Integral over [0, 2 pi] of exp(i m phi) cos^p sin^q, divided by pi.

    Args:
        p: Power of cos
        q: Power of sin
        m: Azimuthal order

    Returns:
        ComplexSurd (rational real or imaginary part)
    """
    if (p + q - m) % 2 or abs(m) > p + q:
        return ComplexSurd()
    half = (p + q - m) // 2
    total = sum(
        binomial(p, s) * binomial(q, half - s) * sign(s - half)
        for s in range(max(0, (p - q - m) // 2), min(p, half) + 1)
    )
    value = Fraction(total, 2 ** (p + q - 1)) if p + q >= 1 else Fraction(2 * total)
    re, im = _i_power(q)
    return ComplexSurd(value * re, value * im)


def I_phi_recur(p: int, q: int, m: int) -> ComplexSurd:
    """I_phi(p, q+2, m) = I_phi(p, q, m) - I_phi(p+2, q, m)."""
    return I_phi(p, q, m) - I_phi(p + 2, q, m)


def I_theta(k: int, t: int, l: int, m: int) -> Fraction:
    """
    Integral over [0, pi] of sin^(k+1) cos^t P_l^m(cos theta), closed form.

    Only meaningful for k - m even, which the caller guarantees.

    Args:
        k: Power of sin theta beyond the measure
        t: Power of cos theta
        l: Degree of the Legendre function
        m: Order, |m| <= l

    Returns:
        Rational value; zero when l - m + t is odd
    """
    if (l - m + t) % 2:
        return Fraction(0)
    am = abs(m)
    prefactor = Fraction(2 ** (l + 1) * sign((m - am) // 2), factorial(l - m))
    total = Fraction(0)
    for nu in range((l - am) // 2 + 1):
        num = pochhammer(Fraction(1, 2) - nu, l) * binomial(l - am, 2 * nu)
        den = (1 + t + l - am - 2 * nu) * gbinomial(Fraction(1 + t + l + k, 2) - nu, (k + am) // 2)
        total += num / den
    return prefactor * total


def u_coeff(p: int, q: int, t: int, idx: Index3D, m: int) -> ComplexSurd:
    """
    Coefficient of Z_{n,l}^(m) in x^p y^q z^t / sqrt(pi).

    u = (-1)^m sqrt((2l+1)/4 (l-m)!/(l+m)!) I_r I_theta conj(I_phi).

    Args:
        p, q, t: Monomial exponents
        idx: (n, l)
        m: Azimuthal order, |m| <= l

    Returns:
        ComplexSurd, exact zero when a selection rule fires
    """
    n, l = idx.n, idx.l
    if abs(m) > l:
        return ComplexSurd()
    phi = I_phi(p, q, m)
    if phi.is_zero():
        return ComplexSurd()
    radial = I_r(p + q + t, n, l)
    if radial.is_zero():
        return ComplexSurd()
    theta = I_theta(p + q, t, l, m)
    if not theta:
        return ComplexSurd()
    norm = SurdSum.sqrt(Fraction((2 * l + 1) * factorial(l - m), 4 * factorial(l + m)), sign(m))
    return phi.conj() * (norm * radial * theta)


def cart_monomial_to_zernike_3d(p: int, q: int, t: int) -> ZernExpansion3D:
    """
    All nonzero u for x^p y^q z^t / sqrt(pi).

    Args:
        p, q, t: Monomial exponents

    Returns:
        ZernExpansion3D keyed (n, l, m)
    """
    j = p + q + t
    terms: Dict[Tuple[int, int, int], ComplexSurd] = {}
    for n in range(j % 2, j + 1, 2):
        for l in range(n % 2, n + 1, 2):
            for m in range(-min(l, p + q), min(l, p + q) + 1):
                if (p + q - m) % 2:
                    continue
                u = u_coeff(p, q, t, Index3D(n, l), m)
                if u:
                    terms[(n, l, m)] = u
    logger.debug("cart_monomial_to_zernike_3d(%d, %d, %d): %d terms", p, q, t, len(terms))
    return ZernExpansion3D(terms)


def project_monomial_3d(p: int, q: int, t: int, idx: Index3D, m: int) -> ComplexSurd:
    """u by direct projection: (1/pi) * ball integral of x^p y^q z^t conj(sqrt(pi) Z)."""
    target = zernike3d_to_cart(idx.n, idx.l, m).conj()
    monomial = CartPoly3({(p, q, t): ComplexSurd(1)})
    return ball_integral(monomial * target)
