"""Tests for Cartesian <-> Zernike conversion on the disk."""

from fractions import Fraction

import pytest
import sympy

from src.exact import CartPoly2, SurdSum, ZernExpansion2D
from src.exact.special import double_factorial
from src.types import AngularKind, NollIndex
from src.utils.errors import InvalidArgumentError
from src.zernike2d import (
    cart_monomial_to_zernike_2d,
    dangling_constant,
    expansion_to_cart_2d,
    rj_trig_to_cart,
    trig_power_expand,
    zernike_to_cart_2d,
)
from src.zernike3d import disk_monomial_integral


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (2, 0, {AngularKind.radial(): Fraction(1, 2), AngularKind.cos(2): Fraction(1, 2)}),
        (0, 1, {AngularKind.sin(1): 1}),
        (2, 2, {AngularKind.radial(): Fraction(1, 8), AngularKind.cos(4): Fraction(-1, 8)}),
        (0, 0, {AngularKind.radial(): 1}),
        (1, 1, {AngularKind.sin(2): Fraction(1, 2)}),
    ],
)
def test_trig_power_expand(p, q, expected):
    assert trig_power_expand(p, q) == expected


def test_trig_power_expand_against_sympy():
    phi = sympy.Symbol("phi", real=True)
    for p in range(5):
        for q in range(5 - p):
            total = sum(
                c * (sympy.cos(kind.m * phi) if kind.kind != "sin" else sympy.sin(kind.m * phi))
                for kind, c in trig_power_expand(p, q).items()
            )
            target = sympy.cos(phi) ** p * sympy.sin(phi) ** q
            diff = sympy.expand((total - target).rewrite(sympy.exp))
            assert sympy.simplify(diff) == 0


@pytest.mark.parametrize("p, q", [(p, q) for p in range(0, 9, 2) for q in range(0, 9, 2)])
def test_dangling_constant_double_factorial_form(p, q):
    j = p + q
    constant = Fraction(dangling_constant(p, q) * (-1) ** (q // 2), 2**j)
    expected = Fraction(double_factorial(p - 1) * double_factorial(q - 1), double_factorial(j))
    assert constant == expected


def test_dangling_constant_vanishes_for_odd_powers():
    assert dangling_constant(1, 1) == 0
    assert dangling_constant(3, 1) == 0
    assert dangling_constant(2, 1) == 0


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (1, 1, {(2, 2, "sin"): Fraction(1, 2)}),
        (0, 0, {(0, 0, "radial"): 1}),
        (
            2,
            2,
            {
                (4, 4, "cos"): Fraction(-1, 8),
                (0, 0, "radial"): Fraction(1, 24),
                (2, 0, "radial"): Fraction(1, 16),
                (4, 0, "radial"): Fraction(1, 48),
            },
        ),
    ],
)
def test_cart_monomial_to_zernike_2d(p, q, expected):
    assert cart_monomial_to_zernike_2d(p, q) == ZernExpansion2D(expected)


@pytest.mark.parametrize(
    "j, m, kind, expected",
    [
        (2, 2, "cos", {(2, 0): 1, (0, 2): -1}),
        (4, 0, "cos", {(4, 0): 1, (2, 2): 2, (0, 4): 1}),
        (5, 3, "sin", {(4, 1): 3, (2, 3): 2, (0, 5): -1}),
        (1, 1, "sin", {(0, 1): 1}),
    ],
)
def test_rj_trig_to_cart(j, m, kind, expected):
    assert rj_trig_to_cart(j, m, kind) == CartPoly2(expected)


def test_rj_trig_to_cart_rejects_bad_arguments():
    with pytest.raises(InvalidArgumentError):
        rj_trig_to_cart(3, 2, "cos")
    with pytest.raises(InvalidArgumentError):
        rj_trig_to_cart(2, 0, "sin")
    with pytest.raises(InvalidArgumentError):
        rj_trig_to_cart(2, 2, "tan")


def test_zernike_to_cart_2d_values():
    root3, root10 = SurdSum.sqrt(3), SurdSum.sqrt(10)
    assert zernike_to_cart_2d(NollIndex(1)) == CartPoly2({(0, 0): 1})
    root6 = SurdSum.sqrt(6)
    assert zernike_to_cart_2d(NollIndex(4)) == CartPoly2(
        {(0, 0): -root3, (2, 0): 2 * root3, (0, 2): 2 * root3}
    )
    assert zernike_to_cart_2d(NollIndex(6)) == CartPoly2({(2, 0): root6, (0, 2): -root6})
    assert zernike_to_cart_2d(NollIndex(14)) == CartPoly2(
        {(4, 0): root10, (2, 2): -6 * root10, (0, 4): root10}
    )


def test_noll_functions_are_orthonormal_over_the_disk():
    polys = [zernike_to_cart_2d(NollIndex(j)) for j in range(1, 16)]
    for a, pa in enumerate(polys):
        for b, pb in enumerate(polys):
            total = SurdSum()
            for (x, y), c in (pa * pb).items():
                total = total + c * disk_monomial_integral(x, y)
            assert total == (1 if a == b else 0)


def _roundtrip(jmax):
    for j in range(jmax + 1):
        for q in range(j + 1):
            p = j - q
            assert expansion_to_cart_2d(cart_monomial_to_zernike_2d(p, q)) == CartPoly2({(p, q): 1})


def test_roundtrip_small_degrees():
    _roundtrip(6)


@pytest.mark.slow
def test_roundtrip_full_range():
    _roundtrip(10)
