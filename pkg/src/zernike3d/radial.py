"""Sphere radial polynomials R_n^(l) and the inverse expansions f and f-hat."""

import logging
from fractions import Fraction
from typing import Dict

from ..exact.poly import RadialPoly
from ..exact.special import binomial, pochhammer, sign
from ..exact.surd import SurdSum
from ..shared.cache import memoized
from ..types import Index3D
from ..utils.errors import InvalidArgumentError, OutOfRangeError

logger = logging.getLogger(__name__)


@memoized("radial_3d")
def _radial_3d(n: int, l: int) -> RadialPoly:
    alpha = (n - l) // 2
    scale = Fraction(1, 2 ** (n - l) * binomial(n, l))
    coeffs = {}
    for s in range(alpha + 1):
        c = sign(s) * binomial(n, s) * binomial(l + alpha - s, l)
        c *= binomial(2 * n + 1 - 2 * s, n - l)
        coeffs[n - 2 * s] = SurdSum.sqrt(2 * n + 3, scale * c)
    return RadialPoly(coeffs)


def radial_3d(idx: Index3D) -> RadialPoly:
    """
    R_n^(l) in descending powers; every coefficient is rational * sqrt(2n+3).

    Args:
        idx: Valid (n, l)

    Returns:
        RadialPoly orthonormal with weight r^2 on [0, 1]
    """
    return _radial_3d(idx.n, idx.l)


def radial_3d_alt(idx: Index3D) -> RadialPoly:
    """R_n^(l) in ascending powers r^(l+2s); must agree with radial_3d."""
    n, l, alpha = idx.n, idx.l, idx.alpha
    scale = Fraction(sign(alpha), 2 ** (n - l) * binomial(n, l))
    coeffs = {}
    for s in range(alpha + 1):
        c = sign(s) * binomial(n, alpha - s) * binomial(l + s, l)
        c *= binomial(l + 1 + n + 2 * s, n - l)
        coeffs[l + 2 * s] = SurdSum.sqrt(2 * n + 3, scale * c)
    return RadialPoly(coeffs)


def _check_power(j: int, l: int) -> None:
    if j < l or (j - l) % 2:
        raise InvalidArgumentError("r^j needs j >= l with j - l even", {"j": j, "l": l})


def f_coeff(j: int, idx: Index3D) -> SurdSum:
    """
    Coefficient of R_n^(l) in the expansion of r^j.

    f = sqrt(2n+3)/(j+3+l) * ((j-n)/2+1)_alpha / ((j-l)/2+q+1)_alpha, q = l + 3/2.

    Args:
        j: Power, j >= l, j - l even
        idx: (n, l) with n <= j

    Returns:
        Rational multiple of sqrt(2n+3)
    """
    n, l = idx.n, idx.l
    _check_power(j, l)
    if n > j:
        raise InvalidArgumentError("f_{j,n,l} needs n <= j", {"j": j, "n": n, "l": l})
    alpha = idx.alpha
    num = pochhammer((j - n) // 2 + 1, alpha)
    den = pochhammer(Fraction(j - l, 2) + Fraction(idx.two_q, 2) + 1, alpha)
    return SurdSum.sqrt(2 * n + 3, Fraction(1, j + 3 + l) * num / den)


def f_recur_j(f: SurdSum, j: int, n: int, l: int) -> SurdSum:
    """f_{j+2,n,l} from f_{j,n,l}."""
    den = (j - n + 2) * (j + n + 5)
    if den == 0:
        raise OutOfRangeError("j-recurrence denominator vanishes", {"j": j, "n": n, "l": l})
    return f * Fraction((j + 3 + l) * (j - l + 2), den)


def f_recur_n(f: SurdSum, j: int, n: int, l: int) -> SurdSum:
    """f_{j,n+2,l} from f_{j,n,l}; carries sqrt((2n+7)/(2n+3))."""
    if n + 2 > j:
        raise OutOfRangeError("n-recurrence target exceeds j", {"j": j, "n": n, "l": l})
    return f * SurdSum.sqrt(Fraction(2 * n + 7, 2 * n + 3), Fraction(j - n, j + 5 + n))


def f_recur_l(f: SurdSum, j: int, n: int, l: int) -> SurdSum:
    """f_{j,n,l+2} from f_{j,n,l}."""
    if j == l or l + 2 > n:
        raise OutOfRangeError("l-recurrence target leaves the valid grid", {"j": j, "n": n, "l": l})
    return f * Fraction(j + 3 + l, j - l)


def power_to_radial_3d(j: int, l: int) -> Dict[int, SurdSum]:
    """Expand r^j over R_n^(l), n = l, l+2, ..., j."""
    _check_power(j, l)
    return {n: f_coeff(j, Index3D(n, l)) for n in range(l, j + 1, 2)}


def power_to_radial_3d_fixed_n(j: int, n: int) -> Dict[int, SurdSum]:
    """
    Expand r^j over R_n^(l) at fixed n, l = n mod 2, ..., n.

    The coefficient matrix (rows l, columns powers r^e) is triangular with
    diagonal entries the lowest coefficient of each R_n^(l); the solve walks
    the powers upwards.

    Args:
        j: Power, j <= n, n - j even
        n: Radial order

    Returns:
        Map l -> f-hat with r^j = sum_l fhat_l R_n^(l)
    """
    if j < 0 or j > n or (n - j) % 2:
        raise InvalidArgumentError("f-hat needs j <= n with n - j even", {"j": j, "n": n})
    ls = list(range(n % 2, n + 1, 2))
    rows = {l: radial_3d(Index3D(n, l)) for l in ls}
    fhat: Dict[int, SurdSum] = {}
    for e in ls:
        rhs = SurdSum.rational(1 if e == j else 0)
        for l in ls:
            if l >= e:
                break
            rhs = rhs - fhat[l] * rows[l].get(e, SurdSum())
        fhat[e] = rhs / rows[e][e]
        logger.debug("fhat(%d, %d): l=%d -> %s", j, n, e, fhat[e])
    return {l: v for l, v in fhat.items() if v}
