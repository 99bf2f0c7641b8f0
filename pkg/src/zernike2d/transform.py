"""Cartesian <-> Zernike conversion on the unit disk."""

import logging
from fractions import Fraction
from typing import Dict

from ..exact.poly import CartPoly2, ZernExpansion2D
from ..exact.special import binomial, sign
from ..types import AngularKind, Index2D, NollIndex
from ..utils.errors import InvalidArgumentError
from .noll import noll_normalization, noll_unpack
from .radial import power_to_radial_2d, radial_2d

logger = logging.getLogger(__name__)


def dangling_constant(p: int, q: int) -> int:
    """C(p, q) = sum_l C(p, j/2 - l) C(q, l) (-1)^l for even j = p + q, else 0."""
    j = p + q
    if j % 2:
        return 0
    return sum(binomial(p, j // 2 - l) * binomial(q, l) * sign(l) for l in range(q + 1))


def trig_power_expand(p: int, q: int) -> Dict[AngularKind, Fraction]:
    """
    Distribute cos^p(phi) sin^q(phi) over cos(m phi) (q even) or sin(m phi) (q odd).

    Args:
        p: Power of cos
        q: Power of sin

    Returns:
        Map AngularKind -> rational coefficient; the radial kind holds the constant
    """
    if p < 0 or q < 0:
        raise InvalidArgumentError("powers must be nonnegative", {"p": p, "q": q})
    j = p + q
    prefactor = Fraction(sign(q // 2), 2**j)
    out: Dict[AngularKind, Fraction] = {}
    for s in range((j - 1) // 2 + 1 if j > 0 else 0):
        total = sum(
            binomial(p, s - l) * binomial(q, l) * sign(l)
            for l in range(max(0, s - p), min(q, s) + 1)
        )
        if total:
            m = j - 2 * s
            kind = AngularKind.cos(m) if q % 2 == 0 else AngularKind.sin(m)
            out[kind] = 2 * total * prefactor
    if q % 2 == 0 and j % 2 == 0:
        constant = dangling_constant(p, q)
        if constant:
            out[AngularKind.radial()] = constant * prefactor
    return out


def cart_monomial_to_zernike_2d(p: int, q: int) -> ZernExpansion2D:
    """
    Expand x^p y^q = r^(p+q) cos^p sin^q over R_n^m cos/sin(m phi).

    Args:
        p: Power of x
        q: Power of y

    Returns:
        ZernExpansion2D keyed (n, m, kind)
    """
    j = p + q
    acc: Dict = {}
    for kind, c in trig_power_expand(p, q).items():
        for n, h in power_to_radial_2d(j, kind.m).items():
            key = (n, kind.m, kind.kind)
            acc[key] = acc.get(key, Fraction(0)) + c * h
    return ZernExpansion2D(acc)


def _planar_power(half: int) -> CartPoly2:
    """(x^2 + y^2)**half."""
    return CartPoly2({(2 * t, 2 * (half - t)): binomial(half, t) for t in range(half + 1)})


def rj_trig_to_cart(j: int, m: int, kind: str) -> CartPoly2:
    """
    r^j cos(m phi) or r^j sin(m phi) as a polynomial in x, y.

    Args:
        j: Power of r
        m: Azimuthal order
        kind: "cos" or "sin" ("radial" is accepted as cos with m = 0)

    Returns:
        CartPoly2
    """
    if kind == "radial":
        kind = "cos"
    if kind not in ("cos", "sin"):
        raise InvalidArgumentError(f"unknown kind {kind!r}", {"kind": kind})
    if kind == "sin" and m < 1:
        raise InvalidArgumentError("sin kind needs m >= 1", {"j": j, "m": m})
    if m < 0 or j < m or (j - m) % 2:
        raise InvalidArgumentError("r^j trig(m phi) needs j >= m with j - m even", {"j": j, "m": m})
    start = 0 if kind == "cos" else 1
    harmonic = CartPoly2(
        {(m - k, k): sign(k // 2) * binomial(m, k) for k in range(start, m + 1, 2)}
    )
    return _planar_power((j - m) // 2) * harmonic


def zernike_term_to_cart(idx: Index2D, kind: str) -> CartPoly2:
    """R_n^m(r) times cos/sin(m phi), without normalisation."""
    out = CartPoly2()
    for e, c in radial_2d(idx).items():
        out = out + rj_trig_to_cart(e, idx.m, kind).scale(c)
    return out


def zernike_to_cart_2d(j: NollIndex) -> CartPoly2:
    """
    Normalised Z_j as a polynomial in x, y.

    Args:
        j: Noll index

    Returns:
        CartPoly2 of sqrt(2n+2) R_n^m cos/sin(m phi), or sqrt(n+1) R_n^0
    """
    if not isinstance(j, NollIndex):
        j = NollIndex(j)
    idx, kind = noll_unpack(j)
    return zernike_term_to_cart(idx, kind.kind).scale(noll_normalization(j))


def expansion_to_cart_2d(expansion: ZernExpansion2D) -> CartPoly2:
    """Sum c * R_n^m trig(m phi) over an expansion, back in Cartesian form."""
    out = CartPoly2()
    for (n, m, kind), c in expansion.items():
        out = out + zernike_term_to_cart(Index2D(n, m), kind).scale(c)
    logger.debug("expansion_to_cart_2d: %d terms -> %d monomials", len(expansion), len(out))
    return out
