"""Tests for exact surd arithmetic."""

from fractions import Fraction

import mpmath
import pytest

from src.exact import (
    ComplexSurd,
    SurdSum,
    complex_conj,
    complex_mul,
    normalize_radicand,
    surd_add,
    surd_mul,
    surd_neg,
    surd_to_float,
)


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, (1, 1)),
        (12, (2, 3)),
        (2028807, (297, 23)),
        (2028117, (1, 2028117)),
        (2 * 3 * 5 * 7, (1, 210)),
    ],
)
def test_normalize_radicand(n, expected):
    assert normalize_radicand(n) == expected


def test_normalize_radicand_large_uses_factorisation():
    # 2^2 * (10^9+7)^2 * 3 exceeds the trial-division limit
    big = 4 * (10**9 + 7) ** 2 * 3
    assert normalize_radicand(big) == (2 * (10**9 + 7), 3)


def test_normalize_radicand_rejects_zero():
    with pytest.raises(ValueError):
        normalize_radicand(0)


def test_sqrt_canonicalises():
    assert SurdSum.sqrt(12) == SurdSum.sqrt(3, 2)
    assert SurdSum.sqrt(Fraction(1, 3)) == SurdSum.sqrt(3, Fraction(1, 3))
    assert SurdSum.sqrt(0).is_zero()


def test_constructor_normalises_radicands():
    assert SurdSum({12: 1}) == SurdSum.sqrt(3, 2)
    assert SurdSum({8: 1, 2: 1}) == SurdSum.sqrt(2, 3)
    assert SurdSum({4: Fraction(1, 2), 1: Fraction(-1)}).is_zero()
    with pytest.raises(ValueError):
        SurdSum({0: 1})


def test_rational_sums_hash_like_their_value():
    assert hash(SurdSum.rational(3)) == hash(3)
    assert hash(SurdSum.rational(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert hash(SurdSum()) == hash(0)
    assert 3 in {SurdSum.rational(3)}
    assert {Fraction(5, 7): "x"}[SurdSum.rational(Fraction(5, 7))] == "x"
    assert hash(ComplexSurd(2)) == hash(2)


def test_products():
    root2 = SurdSum.sqrt(2)
    assert root2 * root2 == 2
    assert SurdSum.sqrt(6, Fraction(1, 2)) * SurdSum.sqrt(10, Fraction(1, 3)) == SurdSum.sqrt(
        15, Fraction(1, 3)
    )
    one_plus = SurdSum({1: 1, 2: 1})
    one_minus = SurdSum({1: 1, 2: -1})
    assert one_plus * one_minus == -1


def test_functional_api():
    half = SurdSum.rational(Fraction(1, 2))
    assert surd_add(half, half) == 1
    assert surd_neg(half) == Fraction(-1, 2)
    assert surd_mul(SurdSum.sqrt(3), SurdSum.sqrt(3)) == 3
    assert complex_mul(ComplexSurd.i(), ComplexSurd.i()) == ComplexSurd(-1)
    z = ComplexSurd(SurdSum.sqrt(3, Fraction(1, 2)), SurdSum.sqrt(5, Fraction(1, 4)))
    conj = ComplexSurd(SurdSum.sqrt(3, Fraction(1, 2)), SurdSum.sqrt(5, Fraction(-1, 4)))
    assert complex_conj(z) == conj


def test_zero_terms_are_dropped():
    s = SurdSum.sqrt(2) - SurdSum.sqrt(2)
    assert s.is_zero()
    assert not s
    assert s == 0


def test_inverse_and_division():
    s = SurdSum.sqrt(7, 3)
    assert s * s.inverse() == 1
    assert SurdSum.sqrt(6) / SurdSum.sqrt(2) == SurdSum.sqrt(3)
    with pytest.raises(ZeroDivisionError):
        SurdSum({1: 1, 2: 1}).inverse()


def test_sign_of_sums():
    assert SurdSum({1: -1, 2: 1}).sign() == 1
    assert SurdSum({1: 2, 3: -1}).sign() == 1
    assert SurdSum({1: Fraction(-17, 10), 3: 1}).sign() == 1
    assert SurdSum({1: Fraction(-18, 10), 3: 1}).sign() == -1
    assert SurdSum().sign() == 0


def test_to_float():
    assert float(surd_to_float(SurdSum.rational(1))) == 1.0
    assert float(surd_to_float(SurdSum.sqrt(2))) == pytest.approx(1.4142135623730951, abs=1e-15)
    third_root3 = SurdSum.sqrt(3, Fraction(1, 3))
    assert float(surd_to_float(third_root3)) == pytest.approx(0.5773502691896258, abs=1e-15)


def test_to_float_extended_precision_resolves_cancellation():
    # sqrt(10^12 + 1) - 10^6 is about 5e-7
    s = SurdSum.sqrt(10**12 + 1) - 10**6
    value = surd_to_float(s, 113)
    assert float(value) == pytest.approx(4.999999999998750e-07, rel=1e-12)


def _pell(steps):
    # x^2 - 2 y^2 = 1, so x - y sqrt2 = 1 / (x + y sqrt2)
    x, y = 3, 2
    for _ in range(steps):
        x, y = 3 * x + 4 * y, 2 * x + 3 * y
    return x, y


@pytest.mark.parametrize("precision", [53, 113])
def test_to_float_adapts_to_heavy_cancellation(precision):
    x, y = _pell(40)  # about 200 bits cancel
    value = surd_to_float(SurdSum({1: x, 2: -y}), precision)
    with mpmath.workprec(4 * precision + 400):
        expected = 1 / (x + y * mpmath.sqrt(2))
        assert abs(value - expected) <= abs(expected) * mpmath.mpf(2) ** (1 - precision)
    assert SurdSum({1: x, 2: -y}).sign() == 1
    assert SurdSum({1: -x, 2: y}).sign() == -1


@pytest.mark.parametrize("a", [10**6, 10**9])
def test_to_float_double_precision_near_cancellation(a):
    s = SurdSum.sqrt(a * a + 1) - a
    assert float(s) == pytest.approx(1 / (2 * a + 1 / (2 * a)), rel=1e-14)


def test_render():
    assert SurdSum.sqrt(3, Fraction(1, 6)).render() == "1/6*3^(1/2)"
    assert SurdSum({1: -1, 2: 2}).render() == "-1 +2*2^(1/2)"
    assert SurdSum().render() == "0"
    assert ComplexSurd(Fraction(1, 2), SurdSum.sqrt(2)).render() == "1/2 , 2^(1/2)"


def test_json_roundtrip():
    s = SurdSum({1: Fraction(-3, 4), 7: Fraction(2, 5)})
    assert SurdSum.from_json(s.to_json()) == s
    z = ComplexSurd(s, SurdSum.sqrt(2))
    assert ComplexSurd.from_json(z.to_json()) == z


def test_complex_arithmetic():
    z = ComplexSurd(1, SurdSum.sqrt(3))
    assert z * z.conj() == ComplexSurd(4)
    assert z.times_i() == ComplexSurd(-SurdSum.sqrt(3), 1)
    assert z.to_complex() == pytest.approx(complex(1, 3**0.5))
