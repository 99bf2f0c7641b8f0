"""Integer and rational combinatorial helpers."""

from fractions import Fraction
from math import comb, factorial
from typing import Union

Number = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """C(n, k) for integers, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def gbinomial(x: Number, k: int) -> Fraction:
    """Generalised binomial x(x-1)...(x-k+1)/k! for rational x."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    for i in range(k):
        num *= Fraction(x) - i
    return num / factorial(k)


def pochhammer(x: Number, k: int) -> Fraction:
    """Rising factorial (x)_k = x(x+1)...(x+k-1); (x)_0 = 1."""
    if k < 0:
        raise ValueError(f"Pochhammer length must be >= 0, got {k}")
    out = Fraction(1)
    for i in range(k):
        out *= Fraction(x) + i
    return out


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def sign(k: int) -> int:
    """(-1)**k for any integer k."""
    return -1 if k % 2 else 1
