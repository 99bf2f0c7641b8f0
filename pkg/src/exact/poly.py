"""Sparse exact polynomial containers and Zernike expansion maps."""

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Callable, Dict, Generic, Iterator, List, Mapping, Tuple, TypeVar, Union

import numpy as np

from .surd import ComplexSurd, SurdSum

K = TypeVar("K")
C = TypeVar("C", SurdSum, ComplexSurd)

Coefficient = Union[SurdSum, ComplexSurd]


class _SparseMap(Generic[K, C]):
    """Immutable map key -> nonzero coefficient, iterated in sorted key order."""

    __slots__ = ("_items", "_lookup", "_hash")

    coefficient_type: Callable[..., Any] = SurdSum

    def __init__(self, coeffs: Union[Mapping[K, Any], None] = None):
        clean = {}
        for key, value in (coeffs or {}).items():
            value = self._wrap(value)
            if value:
                clean[self._check_key(key)] = value
        ordered = sorted(clean.items(), key=lambda kv: self._order(kv[0]))
        self._items: Tuple[Tuple[K, C], ...] = tuple(ordered)
        self._lookup: Dict[K, C] = dict(ordered)
        self._hash = hash(self._items)

    @classmethod
    def _wrap(cls, value: Any) -> Any:
        if isinstance(value, cls.coefficient_type):
            return value
        if cls.coefficient_type is ComplexSurd:
            return ComplexSurd(value)
        return SurdSum.rational(value)

    @staticmethod
    def _check_key(key: Any) -> Any:
        return key

    @staticmethod
    def _order(key: Any) -> Any:
        return key

    @property
    def coeffs(self) -> Dict[K, C]:
        return dict(self._lookup)

    def items(self) -> Iterator[Tuple[K, C]]:
        return iter(self._items)

    def keys(self) -> List[K]:
        return [k for k, _ in self._items]

    def get(self, key: K, default: Any = None) -> Any:
        return self._lookup.get(key, default)

    def __getitem__(self, key: K) -> C:
        return self._lookup[key]

    def __contains__(self, key: object) -> bool:
        return key in self._lookup

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def is_zero(self) -> bool:
        return not self._items

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._items == other._items  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._items)
        for key, value in other._items:
            acc[key] = acc[key] + value if key in acc else value
        return type(self)(acc)

    def __neg__(self):
        return type(self)({k: -v for k, v in self._items})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Any):
        """Multiply every coefficient by a scalar (int, Fraction, SurdSum, ComplexSurd)."""
        return type(self)({k: v * factor for k, v in self._items})

    def to_json(self) -> List[Dict[str, Any]]:
        return [{"key": _key_list(k), "terms": v.to_json()} for k, v in self._items]

    @classmethod
    def from_json(cls, rows: List[Mapping[str, Any]]):
        parse = cls.coefficient_type.from_json
        return cls({_key_from_list(row["key"]): parse(row["terms"]) for row in rows})

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self._items)
        return f"{type(self).__name__}({{{body}}})"


def _key_list(key: Any) -> List[Any]:
    return list(key) if isinstance(key, tuple) else [key]


def _key_from_list(values: List[Any]) -> Any:
    return values[0] if len(values) == 1 else tuple(values)


class _Polynomial(_SparseMap[K, C]):
    """Sparse map whose keys are exponents, so that multiplication is defined."""

    @staticmethod
    def _combine(k1: Any, k2: Any) -> Any:
        raise NotImplementedError

    def __mul__(self, other):
        if type(other) is not type(self):
            return self.scale(other)
        acc: Dict[Any, Any] = {}
        for k1, v1 in self._items:
            for k2, v2 in other._items:
                key = self._combine(k1, k2)
                prod = v1 * v2
                acc[key] = acc[key] + prod if key in acc else prod
        return type(self)(acc)

    def __rmul__(self, factor):
        return self.scale(factor)

    def __pow__(self, power: int):
        result = self.one()
        for _ in range(power):
            result = result * self
        return result

    @classmethod
    def one(cls):
        raise NotImplementedError


# ============= RADIAL =============


class RadialPoly(_Polynomial[int, SurdSum]):
    """Polynomial in r: exponent -> SurdSum."""

    @staticmethod
    def _check_key(key: Any) -> int:
        if not isinstance(key, int) or key < 0:
            raise ValueError(f"radial exponent must be a nonnegative int, got {key!r}")
        return key

    @staticmethod
    def _combine(k1: int, k2: int) -> int:
        return k1 + k2

    @classmethod
    def one(cls) -> "RadialPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: Any = 1) -> "RadialPoly":
        return cls({exponent: coeff})

    @property
    def degree(self) -> int:
        return self._items[-1][0] if self._items else -1

    def leading(self) -> SurdSum:
        return self._items[-1][1]

    def at_one(self) -> SurdSum:
        """Exact value at r = 1."""
        total = SurdSum()
        for _, c in self._items:
            total = total + c
        return total

    def weighted_integral(self, weight_power: int) -> SurdSum:
        """Exact integral of ``r**weight_power * p(r)`` over [0, 1]."""
        total = SurdSum()
        for e, c in self._items:
            total = total + c * Fraction(1, e + weight_power + 1)
        return total

    def float_coefficients(self) -> np.ndarray:
        """Ascending float coefficient array for numpy evaluation."""
        out = np.zeros(self.degree + 1 if self._items else 1)
        for e, c in self._items:
            out[e] = float(c)
        return out

    def eval(self, r: Any) -> Any:
        return np.polynomial.polynomial.polyval(r, self.float_coefficients())


# ============= CARTESIAN =============


class CartPoly2(_Polynomial[Tuple[int, int], SurdSum]):
    """Polynomial in (x, y): (p, q) -> SurdSum."""

    @staticmethod
    def _combine(k1: Tuple[int, int], k2: Tuple[int, int]) -> Tuple[int, int]:
        return (k1[0] + k2[0], k1[1] + k2[1])

    @staticmethod
    def _order(key: Tuple[int, int]) -> Any:
        return (key[0] + key[1], -key[0])

    @classmethod
    def one(cls) -> "CartPoly2":
        return cls({(0, 0): 1})

    def swap_xy(self) -> "CartPoly2":
        return CartPoly2({(q, p): c for (p, q), c in self._items})

    def eval(self, x: Any, y: Any) -> Any:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        total = np.zeros(np.broadcast(x, y).shape)
        for (p, q), c in self._items:
            total = total + float(c) * x**p * y**q
        return total


class CartPoly3(_Polynomial[Tuple[int, int, int], ComplexSurd]):
    """Polynomial in (x, y, z) with complex coefficients."""

    coefficient_type = ComplexSurd

    @staticmethod
    def _combine(k1: Tuple[int, int, int], k2: Tuple[int, int, int]) -> Tuple[int, int, int]:
        return (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])

    @staticmethod
    def _order(key: Tuple[int, int, int]) -> Any:
        return (sum(key), -key[0], -key[1])

    @classmethod
    def one(cls) -> "CartPoly3":
        return cls({(0, 0, 0): ComplexSurd(1)})

    def conj(self) -> "CartPoly3":
        return CartPoly3({k: v.conj() for k, v in self._items})

    def real_part(self) -> "CartPoly3":
        return CartPoly3({k: ComplexSurd(v.re) for k, v in self._items})

    def imag_part(self) -> "CartPoly3":
        return CartPoly3({k: ComplexSurd(v.im) for k, v in self._items})

    def eval(self, x: Any, y: Any, z: Any) -> Any:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        z = np.asarray(z, dtype=float)
        total = np.zeros(np.broadcast(x, y, z).shape, dtype=complex)
        for (p, q, t), c in self._items:
            total = total + c.to_complex() * x**p * y**q * z**t
        return total


@lru_cache(maxsize=None)
def trinomial_expand(half_degree: int) -> CartPoly3:
    """(x^2 + y^2 + z^2)**half_degree with multinomial coefficients."""
    if half_degree < 0:
        raise ValueError(f"half_degree must be >= 0, got {half_degree}")
    h = half_degree
    coeffs = {}
    for s1 in range(h + 1):
        for s2 in range(h - s1 + 1):
            s3 = h - s1 - s2
            weight = factorial(h) // (factorial(s1) * factorial(s2) * factorial(s3))
            coeffs[(2 * s1, 2 * s2, 2 * s3)] = ComplexSurd(weight)
    return CartPoly3(coeffs)


# ============= EXPANSIONS =============

KIND_ORDER = {"radial": 0, "cos": 1, "sin": 2}


class ZernExpansion2D(_SparseMap[Tuple[int, int, str], SurdSum]):
    """(n, m, kind) -> SurdSum with kind in {"cos", "sin", "radial"}."""

    @staticmethod
    def _check_key(key: Tuple[int, int, str]) -> Tuple[int, int, str]:
        n, m, kind = key
        if not (0 <= m <= n and (n - m) % 2 == 0):
            raise ValueError(f"invalid 2D Zernike index ({n}, {m})")
        if (kind == "radial") != (m == 0) or kind not in KIND_ORDER:
            raise ValueError(f"kind {kind!r} does not fit m={m}")
        return key

    @staticmethod
    def _order(key: Tuple[int, int, str]) -> Any:
        n, m, kind = key
        return (KIND_ORDER[kind], m, n)


class ZernExpansion3D(_SparseMap[Tuple[int, int, int], ComplexSurd]):
    """(n, l, m) -> ComplexSurd."""

    coefficient_type = ComplexSurd

    @staticmethod
    def _check_key(key: Tuple[int, int, int]) -> Tuple[int, int, int]:
        n, l, m = key
        if not (0 <= l <= n and (n - l) % 2 == 0 and -l <= m <= l):
            raise ValueError(f"invalid 3D Zernike index ({n}, {l}, {m})")
        return key


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def poly_scale(a, factor):
    return a.scale(factor)
