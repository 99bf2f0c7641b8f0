"""Exact scalars: rationals extended by square roots and the imaginary unit.

A ``SurdSum`` is a finite sum ``q_1*sqrt(k_1) + q_2*sqrt(k_2) + ...`` with rational
``q`` and squarefree ``k``. Radicand 1 carries the rational part. Zero is the empty
sum. A ``ComplexSurd`` pairs two of them.
"""

import logging
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

import mpmath
from sympy import factorint

logger = logging.getLogger(__name__)

Rational = Fraction
Scalar = Union[int, Fraction]

# Above this, radicand extraction hands off to sympy's factoriser.
TRIAL_DIVISION_LIMIT = 10**14


def normalize_radicand(n: int) -> Tuple[int, int]:
    """
    Split ``n`` into ``outside**2 * core`` with ``core`` squarefree.

    Args:
        n: Positive integer

    Returns:
        Tuple (outside, core)
    """
    if n < 1:
        raise ValueError(f"radicand must be positive, got {n}")
    if n > TRIAL_DIVISION_LIMIT:
        outside, core = 1, 1
        for prime, power in factorint(n).items():
            outside *= prime ** (power // 2)
            if power % 2:
                core *= prime
        return outside, core

    outside, core, rest = 1, 1, n
    p = 2
    while p * p <= rest:
        power = 0
        while rest % p == 0:
            rest //= p
            power += 1
        if power:
            outside *= p ** (power // 2)
            if power % 2:
                core *= p
        p += 1 if p == 2 else 2
    # whatever is left is a prime (or 1)
    core *= rest
    return outside, core


def _as_fraction(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def format_rational(q: Fraction) -> str:
    """Render ``q`` as ``num/den`` or ``num`` when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class SurdSum:
    """Immutable canonical sum of rational multiples of squarefree square roots."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, Scalar], None] = None):
        acc: Dict[int, Fraction] = {}
        for k, q in (terms or {}).items():
            outside, core = (1, 1) if k == 1 else normalize_radicand(k)
            acc[core] = acc.get(core, Fraction(0)) + _as_fraction(q) * outside
        self._set(acc)

    def _set(self, terms: Mapping[int, Fraction]) -> None:
        self._terms: Tuple[Tuple[int, Fraction], ...] = tuple(
            sorted((k, q) for k, q in terms.items() if q)
        )
        # rational sums hash like the Fraction they equal
        if all(k == 1 for k, _ in self._terms):
            self._hash = hash(self._terms[0][1] if self._terms else 0)
        else:
            self._hash = hash(self._terms)

    @classmethod
    def _canonical(cls, terms: Mapping[int, Fraction]) -> "SurdSum":
        """Build from squarefree radicands and Fraction coefficients, unchecked."""
        out = cls.__new__(cls)
        out._set(terms)
        return out

    # ---- constructors ----

    @classmethod
    def zero(cls) -> "SurdSum":
        return cls()

    @classmethod
    def rational(cls, q: Scalar) -> "SurdSum":
        return cls._canonical({1: _as_fraction(q)})

    @classmethod
    def sqrt(cls, n: Scalar, coeff: Scalar = 1) -> "SurdSum":
        """Return ``coeff * sqrt(n)`` for a nonnegative rational ``n``."""
        n = _as_fraction(n)
        if n < 0:
            raise ValueError(f"square root of negative value {n}")
        if n == 0:
            return cls()
        # sqrt(a/b) = sqrt(a*b)/b
        outside, core = normalize_radicand(n.numerator * n.denominator)
        return cls._canonical({core: _as_fraction(coeff) * Fraction(outside, n.denominator)})

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[int, Scalar]]) -> "SurdSum":
        """Sum ``q*sqrt(k)`` over arbitrary positive integer ``k``."""
        acc: Dict[int, Fraction] = {}
        for k, q in pairs:
            outside, core = normalize_radicand(k)
            acc[core] = acc.get(core, Fraction(0)) + _as_fraction(q) * outside
        return cls._canonical(acc)

    # ---- accessors ----

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(k == 1 for k, _ in self._terms)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms[0][1] if self._terms else Fraction(0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def rational_part(self) -> Fraction:
        return dict(self._terms).get(1, Fraction(0))

    # ---- arithmetic ----

    def _coerce(self, other) -> "SurdSum":
        if isinstance(other, SurdSum):
            return other
        if isinstance(other, (int, Fraction)):
            return SurdSum.rational(other)
        return NotImplemented

    def __add__(self, other) -> "SurdSum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for k, q in other._terms:
            acc[k] = acc.get(k, Fraction(0)) + q
        return SurdSum._canonical(acc)

    __radd__ = __add__

    def __neg__(self) -> "SurdSum":
        return SurdSum._canonical({k: -q for k, q in self._terms})

    def __sub__(self, other) -> "SurdSum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SurdSum":
        return (-self) + other

    def __mul__(self, other) -> "SurdSum":
        if isinstance(other, (int, Fraction)):
            return SurdSum._canonical({k: q * other for k, q in self._terms})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: Dict[int, Fraction] = {}
        for k1, q1 in self._terms:
            for k2, q2 in other._terms:
                # both squarefree: sqrt(k1*k2) = g*sqrt((k1/g)*(k2/g))
                g = gcd(k1, k2)
                core = (k1 // g) * (k2 // g)
                acc[core] = acc.get(core, Fraction(0)) + q1 * q2 * g
        return SurdSum._canonical(acc)

    __rmul__ = __mul__

    def inverse(self) -> "SurdSum":
        """Reciprocal of a single-term surd: 1/(q*sqrt(k)) = sqrt(k)/(q*k)."""
        if len(self._terms) != 1:
            raise ZeroDivisionError(f"cannot invert multi-term or zero surd {self}")
        k, q = self._terms[0]
        return SurdSum._canonical({k: 1 / (q * k)})

    def __truediv__(self, other) -> "SurdSum":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of surd by zero")
            return SurdSum._canonical({k: q / other for k, q in self._terms})
        if isinstance(other, SurdSum):
            return self * other.inverse()
        return NotImplemented

    def square(self) -> "SurdSum":
        return self * self

    # ---- comparisons ----

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SurdSum.rational(other)
        if not isinstance(other, SurdSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sign(self) -> int:
        """Sign of the real value; exact for one term, via mpmath otherwise."""
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            return 1 if self._terms[0][1] > 0 else -1
        value = surd_to_float(self, 200)
        return 1 if value > 0 else -1

    # ---- rendering ----

    def render(self) -> str:
        """Paper-style text, e.g. ``1/6*3^(1/2)`` or ``-1 +2^(1/2)``."""
        if not self._terms:
            return "0"
        parts: List[str] = []
        for i, (k, q) in enumerate(self._terms):
            text = format_rational(abs(q)) if k == 1 else _surd_term(abs(q), k)
            sign = "-" if q < 0 else ("" if i == 0 else "+")
            parts.append(f"{sign}{text}")
        return " ".join(parts)

    def to_json(self, imag: bool = False) -> List[Dict[str, object]]:
        """Coefficient objects sorted by radicand."""
        out: List[Dict[str, object]] = []
        for k, q in self._terms:
            entry: Dict[str, object] = {"num": q.numerator, "den": q.denominator, "radicand": k}
            entry["imag"] = imag
            out.append(entry)
        return out

    @classmethod
    def from_json(cls, items: Iterable[Mapping[str, object]]) -> "SurdSum":
        return cls.from_terms(
            (int(t["radicand"]), Fraction(int(t["num"]), int(t["den"])))  # type: ignore[arg-type]
            for t in items
        )

    def __float__(self) -> float:
        return float(surd_to_float(self, 53))

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SurdSum({self.render()})"


def _surd_term(q: Fraction, k: int) -> str:
    if q == 1:
        return f"{k}^(1/2)"
    return f"{format_rational(q)}*{k}^(1/2)"


ZERO = SurdSum()
ONE = SurdSum.rational(1)


class ComplexSurd:
    """Pair (re, im) of SurdSums."""

    __slots__ = ("re", "im")

    def __init__(
        self, re: Union[SurdSum, Scalar, None] = None, im: Union[SurdSum, Scalar, None] = None
    ):
        self.re = _as_surd(re)
        self.im = _as_surd(im)

    @classmethod
    def i(cls) -> "ComplexSurd":
        return cls(ZERO, ONE)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conj(self) -> "ComplexSurd":
        return ComplexSurd(self.re, -self.im)

    def _coerce(self, other) -> "ComplexSurd":
        if isinstance(other, ComplexSurd):
            return other
        if isinstance(other, (SurdSum, int, Fraction)):
            return ComplexSurd(other)
        return NotImplemented

    def __add__(self, other) -> "ComplexSurd":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexSurd(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "ComplexSurd":
        return ComplexSurd(-self.re, -self.im)

    def __sub__(self, other) -> "ComplexSurd":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexSurd(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "ComplexSurd":
        return (-self) + other

    def __mul__(self, other) -> "ComplexSurd":
        if isinstance(other, (int, Fraction, SurdSum)):
            return ComplexSurd(self.re * other, self.im * other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexSurd(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def times_i(self) -> "ComplexSurd":
        return ComplexSurd(-self.im, self.re)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, SurdSum)):
            other = ComplexSurd(other)
        if not isinstance(other, ComplexSurd):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash(self.re) if self.im.is_zero() else hash((self.re, self.im))

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def render(self) -> str:
        """``re , im`` as in the harmonic tables."""
        return f"{self.re.render()} , {self.im.render()}"

    def to_json(self) -> List[Dict[str, object]]:
        return self.re.to_json(imag=False) + self.im.to_json(imag=True)

    @classmethod
    def from_json(cls, items: Iterable[Mapping[str, object]]) -> "ComplexSurd":
        items = list(items)
        return cls(
            SurdSum.from_json(t for t in items if not t.get("imag")),
            SurdSum.from_json(t for t in items if t.get("imag")),
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ComplexSurd({self.render()})"


def _as_surd(value) -> SurdSum:
    if value is None:
        return ZERO
    if isinstance(value, SurdSum):
        return value
    return SurdSum.rational(value)


# ============= FUNCTIONAL API =============


def surd_add(a: SurdSum, b: SurdSum) -> SurdSum:
    return a + b


def surd_neg(a: SurdSum) -> SurdSum:
    return -a


def surd_mul(a: SurdSum, b: SurdSum) -> SurdSum:
    return a * b


def complex_mul(a: ComplexSurd, b: ComplexSurd) -> ComplexSurd:
    return a * b


def complex_conj(a: ComplexSurd) -> ComplexSurd:
    return a.conj()


def _sum_at(a: SurdSum, prec: int) -> Tuple[mpmath.mpf, int]:
    """Sum of the terms at ``prec`` bits, with the magnitude of the largest term."""
    with mpmath.workprec(prec):
        total = mpmath.mpf(0)
        largest = None
        for k, q in a.items():
            term = mpmath.mpf(q.numerator) / q.denominator
            if k != 1:
                term *= mpmath.sqrt(k)
            mag = mpmath.mag(term)
            largest = mag if largest is None else max(largest, mag)
            total += term
    return total, int(largest)


def surd_to_float(a: SurdSum, precision: int = 53) -> mpmath.mpf:
    """
    Evaluate ``a`` at ``precision`` binary digits.

    The terms are summed with guard bits; when cancellation between them eats
    more bits than the guard, the sum is redone with the lost bits added to the
    working precision. A nonzero SurdSum never sums to zero (distinct squarefree
    radicands are linearly independent over Q), so the loop ends.

    Args:
        a: Canonical SurdSum
        precision: Target precision in bits

    Returns:
        mpmath float rounded to ``precision`` bits (exact 0 for the zero sum)
    """
    if a.is_zero():
        return mpmath.mpf(0)
    guard = 16 + 2 * len(a.terms).bit_length()
    prec = precision + guard
    while True:
        total, largest = _sum_at(a, prec)
        # bits cancelled between the largest term and the total
        lost = largest - int(mpmath.mag(total)) if total else prec
        if prec - max(lost, 0) >= precision + guard:
            break
        logger.debug("surd_to_float: %d bits cancelled at prec %d, retrying", lost, prec)
        prec = max(2 * prec, precision + guard + lost + guard)
    with mpmath.workprec(precision):
        return +total
