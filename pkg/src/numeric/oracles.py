"""Floating-point oracles for the exact coefficient families.

Every exact value produced by the library has a numeric counterpart here,
computed by quadrature or by evaluating an independent representation.
"""

import logging
from functools import lru_cache
from typing import Callable, Dict, Optional, Tuple

import numpy as np
import sympy

from ..constants import DEFAULT_GRID_ORDER, DEFAULT_SAMPLES, DEFAULT_SEED
from ..exact.poly import RadialPoly
from ..types import Index2D, Index3D, NollIndex, QuadratureRule, SphIndex
from ..zernike2d.noll import noll_normalization, noll_unpack
from ..zernike2d.radial import radial_2d
from ..zernike2d.transform import zernike_to_cart_2d
from ..zernike3d.harmonics import ylm_cart, zernike3d_to_cart
from ..zernike3d.radial import power_to_radial_3d_fixed_n, radial_3d
from .quadrature import ball_grid, gauss_legendre, integrate_unit, sphere_grid

logger = logging.getLogger(__name__)


def _rule(rule: Optional[QuadratureRule]) -> QuadratureRule:
    return rule if rule is not None else gauss_legendre()


# ============= RADIAL =============


def eval_radial(p: RadialPoly, r: float) -> float:
    """Float value of an exact radial polynomial at r."""
    return float(p.eval(r))


def rounding_bound(*polys: RadialPoly) -> float:
    """
    Error bound for Horner evaluation of the given polynomials on [0, 1].

    Scales with the coefficient 1-norm, which grows quickly with the degree
    (about 2.7e5 for R_16^0).
    """
    eps = float(np.finfo(float).eps)
    return sum(
        2 * max(p.degree, 1) * eps * float(np.abs(p.float_coefficients()).sum()) for p in polys
    )


def ortho_check_2d(n: int, n2: int, m: int, rule: Optional[QuadratureRule] = None) -> float:
    """
    Residual of the circle orthogonality relation.

    integral_0^1 r R_n^m R_n2^m dr should equal 1 / (2n + 2) when n = n2, else 0.

    Returns:
        Absolute residual
    """
    p1, p2 = radial_2d(Index2D(n, m)), radial_2d(Index2D(n2, m))
    value = integrate_unit(lambda r: r * p1.eval(r) * p2.eval(r), _rule(rule))
    expected = 1.0 / (2 * n + 2) if n == n2 else 0.0
    return abs(value - expected)


def ortho_check_3d(n: int, n2: int, l: int, rule: Optional[QuadratureRule] = None) -> float:
    """Residual of integral_0^1 r^2 R_n^(l) R_n2^(l) dr against the Kronecker delta."""
    p1, p2 = radial_3d(Index3D(n, l)), radial_3d(Index3D(n2, l))
    value = integrate_unit(lambda r: r**2 * p1.eval(r) * p2.eval(r), _rule(rule))
    return abs(value - (1.0 if n == n2 else 0.0))


def brute_force_h(j: int, idx: Index2D, rule: Optional[QuadratureRule] = None) -> float:
    """h = 2(n+1) integral_0^1 r^(j+1) R_n^m dr."""
    p = radial_2d(idx)
    return 2 * (idx.n + 1) * integrate_unit(lambda r: r ** (j + 1) * p.eval(r), _rule(rule))


def brute_force_f(j: int, idx: Index3D, rule: Optional[QuadratureRule] = None) -> float:
    """f = integral_0^1 r^(j+2) R_n^(l) dr."""
    p = radial_3d(idx)
    return integrate_unit(lambda r: r ** (j + 2) * p.eval(r), _rule(rule))


def fhat_residual(j: int, n: int, rule: Optional[QuadratureRule] = None) -> float:
    """Largest |r^j - sum_l fhat_l R_n^(l)(r)| over the quadrature nodes."""
    r, _ = _rule(rule).mapped_to_unit()
    total = np.zeros_like(r)
    for l, c in power_to_radial_3d_fixed_n(j, n).items():
        total = total + float(c) * radial_3d(Index3D(n, l)).eval(r)
    return float(np.max(np.abs(r**j - total)))


def brute_force_g(
    idx1: Index2D, idx2: Index2D, idx3: Index2D, rule: Optional[QuadratureRule] = None
) -> float:
    """
    g by quadrature: 2(n3+1) integral_0^1 r R1 R2 R3 dr.

    Args:
        idx1: First factor
        idx2: Second factor
        idx3: Target

    Returns:
        Float estimate of g_coeff
    """
    ps = [radial_2d(i) for i in (idx1, idx2, idx3)]
    value = integrate_unit(lambda r: r * ps[0].eval(r) * ps[1].eval(r) * ps[2].eval(r), _rule(rule))
    return 2 * (idx3.n + 1) * value


def brute_force_k(
    idx1: Index3D, idx2: Index3D, idx3: Index3D, rule: Optional[QuadratureRule] = None
) -> float:
    """k by quadrature: integral_0^1 r^2 R1 R2 R3 dr."""
    ps = [radial_3d(i) for i in (idx1, idx2, idx3)]

    def integrand(r: np.ndarray) -> np.ndarray:
        return r**2 * ps[0].eval(r) * ps[1].eval(r) * ps[2].eval(r)

    return integrate_unit(integrand, _rule(rule))


# ============= ANGULAR =============


@lru_cache(maxsize=None)
def _assoc_legendre(l: int, m: int) -> Callable[[np.ndarray], np.ndarray]:
    """P_l^m(x) without the Condon-Shortley phase, lambdified from sympy."""
    x = sympy.Symbol("x", real=True)
    expr = sympy.Integer(-1) ** m * sympy.assoc_legendre(l, m, x)
    return sympy.lambdify(x, expr, modules="numpy")


def i_theta_numeric(k: int, t: int, l: int, m: int, rule: Optional[QuadratureRule] = None) -> float:
    """integral_{-1}^{1} (1-x^2)^(k/2) x^t P_l^m(x) dx, the substituted polar integral."""
    rule = _rule(rule)
    x = rule.nodes
    legendre = np.asarray(_assoc_legendre(l, m)(x)) * np.ones_like(x)
    return float(np.sum(rule.weights * (1 - x**2) ** (k / 2) * x**t * legendre))


@lru_cache(maxsize=None)
def _ylm_polar(l: int, m: int) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    """Y_l^m(theta, phi) for m >= 0 from sympy's closed form."""
    theta, phi = sympy.symbols("theta phi", real=True)
    expr = sympy.Ynm(l, m, theta, phi).expand(func=True)
    return sympy.lambdify((theta, phi), expr, modules="numpy")


def ylm_polar(idx: SphIndex, theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Complex Y_l^(m) on arrays of angles; negative m through conjugation."""
    values = np.asarray(_ylm_polar(idx.l, abs(idx.m))(theta, phi))
    values = values * np.ones_like(theta, dtype=complex)
    if idx.m < 0:
        values = (-1) ** idx.m * np.conj(values)
    return values


def sphere_orthonormality(l_max: int, order: int = DEFAULT_GRID_ORDER) -> float:
    """
    Largest deviation of the Gram matrix of Y_l^(m), l <= l_max, from the identity.

    The harmonics come from their Cartesian form at r = 1; the sqrt(pi) factor is
    divided out as pi on the Gram matrix.

    Args:
        l_max: Largest degree
        order: Grid order

    Returns:
        max |G - I|
    """
    theta, phi, w = sphere_grid(order)
    x, y, z = np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)
    rows = [
        ylm_cart(SphIndex(l, m)).eval(x, y, z) for l in range(l_max + 1) for m in range(-l, l + 1)
    ]
    values = np.array(rows)
    gram = (values * w) @ values.conj().T / np.pi
    residual = float(np.max(np.abs(gram - np.eye(len(rows)))))
    logger.debug(
        "sphere_orthonormality(l_max=%d): %d harmonics, residual %.3e", l_max, len(rows), residual
    )
    return residual


def brute_force_u(
    p: int, q: int, t: int, idx: Index3D, m: int, order: int = DEFAULT_GRID_ORDER
) -> complex:
    """u by quadrature over the ball: (1/pi) integral x^p y^q z^t conj(sqrt(pi) Z) dV."""
    x, y, z, w = ball_grid(order)
    target = np.conj(zernike3d_to_cart(idx.n, idx.l, m).eval(x, y, z))
    return complex(np.sum(w * x**p * y**q * z**t * target) / np.pi)


# ============= CROSS EVALUATION =============


def sample_disk(count: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Uniform points in the unit disk, shape (count, 2)."""
    rng = np.random.default_rng(seed)
    r = np.sqrt(rng.uniform(0.0, 1.0, count))
    phi = rng.uniform(0.0, 2 * np.pi, count)
    return np.column_stack([r * np.cos(phi), r * np.sin(phi)])


def sample_ball(count: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Uniform points in the unit ball, shape (count, 3)."""
    rng = np.random.default_rng(seed)
    r = np.cbrt(rng.uniform(0.0, 1.0, count))
    cos_t = rng.uniform(-1.0, 1.0, count)
    phi = rng.uniform(0.0, 2 * np.pi, count)
    sin_t = np.sqrt(1 - cos_t**2)
    return np.column_stack([r * sin_t * np.cos(phi), r * sin_t * np.sin(phi), r * cos_t])


def cross_eval_2d(j: NollIndex, samples: np.ndarray) -> float:
    """
    Largest gap between the polar and Cartesian evaluations of Z_j.

    Args:
        j: Noll index
        samples: Points, shape (N, 2)

    Returns:
        max |polar - cartesian|
    """
    idx, kind = noll_unpack(j)
    x, y = samples[:, 0], samples[:, 1]
    r, phi = np.hypot(x, y), np.arctan2(y, x)
    angular: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
        "radial": np.ones_like,
        "cos": lambda a: np.cos(idx.m * a),
        "sin": lambda a: np.sin(idx.m * a),
    }
    polar = float(noll_normalization(j)) * radial_2d(idx).eval(r) * angular[kind.kind](phi)
    cartesian = zernike_to_cart_2d(j).eval(x, y)
    return float(np.max(np.abs(polar - cartesian)))


def cross_eval_3d(n: int, l: int, m: int, samples: np.ndarray) -> Tuple[float, float]:
    """
    Largest gaps between R_n^(l)(r) sqrt(pi) Y_l^(m)(theta, phi) and the Cartesian form.

    Args:
        n, l, m: Zernike index
        samples: Points, shape (N, 3)

    Returns:
        (max gap of real parts, max gap of imaginary parts)
    """
    x, y, z = samples[:, 0], samples[:, 1], samples[:, 2]
    r = np.sqrt(x**2 + y**2 + z**2)
    theta = np.arccos(np.clip(z / np.where(r > 0, r, 1.0), -1.0, 1.0))
    phi = np.arctan2(y, x)
    angular = np.sqrt(np.pi) * ylm_polar(SphIndex(l, m), theta, phi)
    polar = radial_3d(Index3D(n, l)).eval(r) * angular
    cartesian = zernike3d_to_cart(n, l, m).eval(x, y, z)
    gap = polar - cartesian
    return float(np.max(np.abs(gap.real))), float(np.max(np.abs(gap.imag)))
