"""Angular-momentum coupling and linearization of sphere radial products."""

import logging
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, List, Tuple

from ..exact.special import sign
from ..exact.surd import SurdSum
from ..shared.cache import memoized
from ..types import Index3D, SphIndex, Wigner3jArgs
from ..utils.errors import InvalidArgumentError
from .radial import f_coeff, radial_3d

logger = logging.getLogger(__name__)


def _triangle(j1: int, j2: int, j: int) -> bool:
    return abs(j1 - j2) <= j <= j1 + j2


@memoized("clebsch_gordan")
def clebsch_gordan(j1: int, m1: int, j2: int, m2: int, j: int, m: int) -> SurdSum:
    """
    (j1 m1 j2 m2 | j1 j2 j m) by the z-sum.

    Args:
        j1, m1: First angular momentum
        j2, m2: Second angular momentum
        j, m: Coupled angular momentum

    Returns:
        Rational multiple of a square root; exact zero when a selection rule fails
    """
    if m1 + m2 != m or not _triangle(j1, j2, j):
        return SurdSum()
    if abs(m1) > j1 or abs(m2) > j2 or abs(m) > j:
        return SurdSum()
    radicand = Fraction(
        (2 * j + 1)
        * factorial(j1 + j2 - j)
        * factorial(j1 - j2 + j)
        * factorial(-j1 + j2 + j)
        * factorial(j1 + m1)
        * factorial(j1 - m1)
        * factorial(j2 + m2)
        * factorial(j2 - m2)
        * factorial(j + m)
        * factorial(j - m),
        factorial(j1 + j2 + j + 1),
    )
    z_lo = max(0, j2 - j - m1, j1 - j + m2)
    z_hi = min(j1 + j2 - j, j1 - m1, j2 + m2)
    total = Fraction(0)
    for z in range(z_lo, z_hi + 1):
        den = (
            factorial(z)
            * factorial(j1 + j2 - j - z)
            * factorial(j1 - m1 - z)
            * factorial(j2 + m2 - z)
            * factorial(j - j2 + m1 + z)
            * factorial(j - j1 - m2 + z)
        )
        total += Fraction(sign(z), den)
    return SurdSum.sqrt(radicand, total)


def wigner3j(args: Wigner3jArgs) -> SurdSum:
    """(j1 j2 j3 / m1 m2 m3) = (-1)^(j1-j2-m3) / sqrt(2 j3 + 1) * CG(j1 m1 j2 m2 | j3, -m3)."""
    if args.m1 + args.m2 + args.m3 != 0:
        return SurdSum()
    cg = clebsch_gordan(args.j1, args.m1, args.j2, args.m2, args.j3, -args.m3)
    return cg * SurdSum.sqrt(Fraction(1, 2 * args.j3 + 1), sign(args.j1 - args.j2 - args.m3))


def _y_product_terms(i1: SphIndex, i2: SphIndex) -> List[Tuple[int, SurdSum]]:
    """(l, parity 3j * coupling 3j) for every l allowed by the selection rules."""
    l1, m1, l2, m2 = i1.l, i1.m, i2.l, i2.m
    big_m = m1 + m2
    terms = []
    for l in range(abs(l1 - l2), l1 + l2 + 1):
        if (l1 + l2 + l) % 2 or abs(big_m) > l:
            continue
        parity = wigner3j(Wigner3jArgs(l1, l2, l, 0, 0, 0))
        coupling = wigner3j(Wigner3jArgs(l1, l2, l, m1, m2, -big_m))
        terms.append((l, parity * coupling))
    return terms


def y_product_gaunt(i1: SphIndex, i2: SphIndex) -> Dict[SphIndex, SurdSum]:
    """
    Gaunt form: sqrt(pi) Y_l1^(m1) Y_l2^(m2) = sum over l of c_l Y_l^(m1+m2).

    c_l = 1/2 sqrt((2l1+1)(2l2+1)(2l+1)) (l1 l2 l; 0 0 0) (l1 l2 l; m1 m2 -M) (-1)^M
    with M = m1 + m2, the phase coming from Y* = (-1)^M Y^(-M). This is the
    pointwise product identity of the orthonormal harmonics.

    Args:
        i1: First harmonic
        i2: Second harmonic

    Returns:
        Map SphIndex(l, M) -> coefficient, zero terms omitted
    """
    l1, l2, big_m = i1.l, i2.l, i1.m + i2.m
    out: Dict[SphIndex, SurdSum] = {}
    for l, value in _y_product_terms(i1, i2):
        norm = SurdSum.sqrt((2 * l1 + 1) * (2 * l2 + 1) * (2 * l + 1), Fraction(sign(big_m), 2))
        value = norm * value
        if value:
            out[SphIndex(l, big_m)] = value
    return out


def _table_weight(triples: List[Tuple[int, int]]) -> Fraction:
    """Squared weight 2 prod(l+1) / W^2 of the tabulated Y-product rows."""
    weight = Fraction(2)
    for l, _ in triples:
        weight *= l + 1
    if all(m == 0 for _, m in triples):
        return weight
    for l, m in triples:
        weight /= factorial(l + abs(m)) * factorial(l - abs(m))
    return weight


def y_product_expand(i1: SphIndex, i2: SphIndex) -> Dict[SphIndex, SurdSum]:
    """
    Tabulated Y-product coefficients in sqrt(pi) units.

    c_l = sqrt(2 (l1+1)(l2+1)(l+1)) / W (l1 l2 l; 0 0 0) (l1 l2 l; m1 m2 -M) (-1)^M
    with M = m1 + m2 and W = 1 when m1 = m2 = M = 0. Otherwise W is the product over
    the three (l, m) pairs of sqrt((l+|m|)! (l-|m|)!).
    Terms, signs and phase match `y_product_gaunt`; only the magnitudes differ.

    Args:
        i1: First harmonic
        i2: Second harmonic

    Returns:
        Map SphIndex(l, M) -> coefficient, zero terms omitted
    """
    l1, m1, l2, m2 = i1.l, i1.m, i2.l, i2.m
    big_m = m1 + m2
    out: Dict[SphIndex, SurdSum] = {}
    for l, value in _y_product_terms(i1, i2):
        weight = _table_weight([(l1, m1), (l2, m2), (l, big_m)])
        value = SurdSum.sqrt(weight, sign(big_m)) * value
        if value:
            out[SphIndex(l, big_m)] = value
    return out


def k_coeff(idx1: Index3D, idx2: Index3D, idx3: Index3D) -> SurdSum:
    """k = integral_0^1 r^2 R1 R2 R3 dr, exact."""
    if (idx1.n + idx2.n - idx3.n) % 2:
        raise InvalidArgumentError(
            "n1 + n2 - n3 must be even", {"n1": idx1.n, "n2": idx2.n, "n3": idx3.n}
        )
    return (radial_3d(idx1) * radial_3d(idx2) * radial_3d(idx3)).weighted_integral(2)


def product_expand_3d(idx1: Index3D, idx2: Index3D, l3: int) -> Dict[int, SurdSum]:
    """
    R_{n1}^(l1) R_{n2}^(l2) = sum over n3 of k R_{n3}^(l3).

    Each power r^e of the product is re-expanded with f_{e,n3,l3}.

    Args:
        idx1: First factor
        idx2: Second factor
        l3: Target angular order, |l1-l2| <= l3 <= l1+l2, l1+l2-l3 even

    Returns:
        Map n3 -> k, zero terms omitted
    """
    l1, l2 = idx1.l, idx2.l
    if not _triangle(l1, l2, l3) or (l1 + l2 - l3) % 2:
        raise InvalidArgumentError(
            "l3 must satisfy |l1-l2| <= l3 <= l1+l2 with l1+l2-l3 even",
            {"l1": l1, "l2": l2, "l3": l3},
        )
    expanded = radial_3d(idx1) * radial_3d(idx2)
    acc: Dict[int, SurdSum] = {}
    for e, c in expanded.items():
        for n3 in range(l3, e + 1, 2):
            term = c * f_coeff(e, Index3D(n3, l3))
            acc[n3] = acc[n3] + term if n3 in acc else term
    return {n3: v for n3, v in sorted(acc.items()) if v}


def wigner_symmetry_check(j_max: int) -> List[Tuple[Wigner3jArgs, str]]:
    """
    Check 3j symmetries over all j_i <= j_max.

    Even column permutations leave the symbol unchanged; odd permutations and
    the sign flip of every m multiply it by (-1)^(j1+j2+j3).

    Args:
        j_max: Largest angular momentum

    Returns:
        List of (arguments, violated rule); empty when every symmetry holds
    """
    failures: List[Tuple[Wigner3jArgs, str]] = []
    for j1, j2, j3 in product(range(j_max + 1), repeat=3):
        if not _triangle(j1, j2, j3):
            continue
        phase = sign(j1 + j2 + j3)
        for m1 in range(-j1, j1 + 1):
            for m2 in range(-j2, j2 + 1):
                m3 = -m1 - m2
                if abs(m3) > j3:
                    continue
                args = Wigner3jArgs(j1, j2, j3, m1, m2, m3)
                value = wigner3j(args)
                checks = [
                    (Wigner3jArgs(j2, j3, j1, m2, m3, m1), value, "even permutation"),
                    (Wigner3jArgs(j2, j1, j3, m2, m1, m3), value * phase, "odd permutation"),
                    (Wigner3jArgs(j1, j2, j3, -m1, -m2, -m3), value * phase, "sign flip"),
                ]
                for other, expected, rule in checks:
                    if wigner3j(other) != expected:
                        failures.append((args, rule))
    logger.debug("wigner_symmetry_check(%d): %d violations", j_max, len(failures))
    return failures
