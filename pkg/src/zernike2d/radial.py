"""Circle radial polynomials R_n^m and the inverse power expansion r^j = sum h R_n^m."""

import logging
from fractions import Fraction
from typing import Dict

from ..exact.poly import RadialPoly
from ..exact.special import binomial, pochhammer, sign
from ..shared.cache import memoized
from ..types import Index2D
from ..utils.errors import InvalidArgumentError, OutOfRangeError

logger = logging.getLogger(__name__)


@memoized("radial_2d")
def _radial_2d(n: int, m: int) -> RadialPoly:
    half = (n - m) // 2
    coeffs = {}
    for s in range(half + 1):
        coeffs[n - 2 * s] = sign(s) * binomial(n - s, s) * binomial(n - 2 * s, half - s)
    return RadialPoly(coeffs)


def radial_2d(idx: Index2D) -> RadialPoly:
    """
    R_n^m in descending powers r^(n-2s).

    Each coefficient is a product of two binomials,
    (-1)^s C(n-s, s) C(n-2s, (n-m)/2 - s).

    Args:
        idx: Valid (n, m)

    Returns:
        Integer-coefficient RadialPoly with R(1) = 1
    """
    return _radial_2d(idx.n, idx.m)


def radial_2d_alt(idx: Index2D) -> RadialPoly:
    """R_n^m in ascending powers r^(m+2s); must agree with radial_2d."""
    n, m = idx.n, idx.m
    half = idx.half
    coeffs = {}
    for s in range(half + 1):
        value = binomial((n + m) // 2 + s, half - s) * binomial(m + 2 * s, s)
        coeffs[m + 2 * s] = sign(half + s) * value
    return RadialPoly(coeffs)


def _check_power(j: int, m: int) -> None:
    if j < m or (j - m) % 2:
        raise InvalidArgumentError("r^j needs j >= m with j - m even", {"j": j, "m": m})


def h_coeff(j: int, idx: Index2D) -> Fraction:
    """
    Coefficient of R_n^m in the expansion of r^j.

    h = (n+1) (-1)^a ((m-j)/2)_{-a} / (1+(m+j)/2)_{1-a}, a = -(n-m)/2.

    Args:
        j: Power, j >= m, j - m even
        idx: (n, m) with n <= j

    Returns:
        Rational h_{j,n,m}
    """
    n, m = idx.n, idx.m
    _check_power(j, m)
    if n > j:
        raise InvalidArgumentError("h_{j,n,m} needs n <= j", {"j": j, "n": n, "m": m})
    a = idx.a
    num = pochhammer(Fraction(m - j, 2), -a)
    den = pochhammer(1 + Fraction(m + j, 2), 1 - a)
    return (n + 1) * sign(a) * num / den


def h_recur_j(h: Fraction, j: int, n: int, m: int) -> Fraction:
    """h_{j+2,n,m} from h_{j,n,m}."""
    den = (j + 2 - n) * (j + 4 + n)
    if den == 0:
        raise OutOfRangeError("j-recurrence denominator vanishes", {"j": j, "n": n, "m": m})
    return h * Fraction((j + 2 + m) * (j + 2 - m), den)


def h_recur_n(h: Fraction, j: int, n: int, m: int) -> Fraction:
    """h_{j,n+2,m} from h_{j,n,m}."""
    if n + 2 > j:
        raise OutOfRangeError("n-recurrence target exceeds j", {"j": j, "n": n, "m": m})
    return h * Fraction((n + 3) * (j - n), (j + 4 + n) * (n + 1))


def h_recur_m(h: Fraction, j: int, n: int, m: int) -> Fraction:
    """h_{j,n,m+2} from h_{j,n,m}."""
    if j == m or m + 2 > n:
        raise OutOfRangeError("m-recurrence target leaves the valid grid", {"j": j, "n": n, "m": m})
    return h * Fraction(j + 2 + m, j - m)


def power_to_radial_2d(j: int, m: int) -> Dict[int, Fraction]:
    """
    Expand r^j over R_n^m, n = m, m+2, ..., j.

    Args:
        j: Power
        m: Azimuthal order, j - m even

    Returns:
        Map n -> h_{j,n,m}
    """
    _check_power(j, m)
    out = {}
    for n in range(m, j + 1, 2):
        out[n] = h_coeff(j, Index2D(n, m))
    logger.debug("power_to_radial_2d(%d, %d): %d terms", j, m, len(out))
    return out
