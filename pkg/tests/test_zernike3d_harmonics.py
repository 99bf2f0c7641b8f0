"""Tests for Cartesian harmonics and 3D Zernike functions."""

from fractions import Fraction

import pytest

from src.exact import CartPoly3, ComplexSurd, SurdSum
from src.types import SphIndex
from src.utils.errors import InvalidIndexError
from src.zernike3d import (
    ball_integral,
    ball_monomial_integral,
    disk_monomial_integral,
    ylm_cart,
    zernike3d_to_cart,
)


def _c(re=0, im=0):
    return ComplexSurd(re, im)


def test_ylm_cart_low_orders():
    assert ylm_cart(SphIndex(0, 0)) == CartPoly3({(0, 0, 0): _c(Fraction(1, 2))})
    assert ylm_cart(SphIndex(1, 0)) == CartPoly3({(0, 0, 1): _c(SurdSum.sqrt(3, Fraction(1, 2)))})
    assert ylm_cart(SphIndex(1, 1)) == CartPoly3(
        {
            (1, 0, 0): _c(SurdSum.sqrt(6, Fraction(-1, 4))),
            (0, 1, 0): _c(0, SurdSum.sqrt(6, Fraction(-1, 4))),
        }
    )


def test_ylm_cart_two_two():
    root30 = SurdSum.sqrt(30)
    assert ylm_cart(SphIndex(2, 2)) == CartPoly3(
        {
            (2, 0, 0): _c(root30 * Fraction(1, 8)),
            (0, 2, 0): _c(root30 * Fraction(-1, 8)),
            (1, 1, 0): _c(0, root30 * Fraction(1, 4)),
        }
    )


def test_negative_m_is_signed_conjugate():
    for l in range(6):
        for m in range(1, l + 1):
            expected = ylm_cart(SphIndex(l, m)).conj().scale((-1) ** m)
            assert ylm_cart(SphIndex(l, -m)) == expected
            for n in range(l, 8, 2):
                expected = zernike3d_to_cart(n, l, m).conj().scale((-1) ** m)
                assert zernike3d_to_cart(n, l, -m) == expected


def test_harmonics_are_homogeneous():
    for l in range(7):
        for m in range(-l, l + 1):
            assert all(sum(key) == l for key in ylm_cart(SphIndex(l, m)).keys())


def test_zernike3d_values():
    assert zernike3d_to_cart(0, 0, 0) == CartPoly3({(0, 0, 0): _c(SurdSum.sqrt(3, Fraction(1, 2)))})
    root7 = SurdSum.sqrt(7)
    quarter = root7 * Fraction(1, 4)
    assert zernike3d_to_cart(2, 0, 0) == CartPoly3(
        {
            (0, 0, 0): _c(quarter * -3),
            (2, 0, 0): _c(quarter * 5),
            (0, 2, 0): _c(quarter * 5),
            (0, 0, 2): _c(quarter * 5),
        }
    )
    root30 = SurdSum.sqrt(30, Fraction(-1, 4))
    expected = CartPoly3({(1, 0, 0): _c(root30), (0, 1, 0): _c(0, root30)})
    assert zernike3d_to_cart(1, 1, 1) == expected


def test_zernike3d_four_four_four():
    # 3/32 sqrt(770) (x^2+2xy-y^2)(x^2-2xy-y^2) , 3/8 sqrt(770) xy(x-y)(x+y)
    re = SurdSum.sqrt(770, Fraction(3, 32))
    im = SurdSum.sqrt(770, Fraction(3, 8))
    assert zernike3d_to_cart(4, 4, 4) == CartPoly3(
        {
            (4, 0, 0): _c(re),
            (2, 2, 0): _c(re * -6),
            (0, 4, 0): _c(re),
            (3, 1, 0): _c(0, im),
            (1, 3, 0): _c(0, -im),
        }
    )


def test_zernike3d_invalid_index():
    with pytest.raises(InvalidIndexError):
        zernike3d_to_cart(3, 2, 0)
    with pytest.raises(InvalidIndexError):
        zernike3d_to_cart(2, 2, 3)


def test_monomial_integrals():
    assert ball_monomial_integral(0, 0, 0) == Fraction(4, 3)
    assert ball_monomial_integral(2, 0, 0) == Fraction(4, 15)
    assert ball_monomial_integral(1, 0, 0) == 0
    assert disk_monomial_integral(0, 0) == 1
    assert disk_monomial_integral(2, 0) == Fraction(1, 4)
    assert disk_monomial_integral(0, 3) == 0


def test_zernike3d_orthonormal_over_the_ball():
    indices = [
        (n, l, m) for n in range(4) for l in range(n % 2, n + 1, 2) for m in range(-l, l + 1)
    ]
    polys = {idx: zernike3d_to_cart(*idx) for idx in indices}
    for a in indices:
        for b in indices:
            value = ball_integral(polys[a] * polys[b].conj())
            assert value == ComplexSurd(1 if a == b else 0)
