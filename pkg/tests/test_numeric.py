"""Tests for the quadrature layer and the floating-point oracles."""

import numpy as np
import pytest

from src.constants import CROSS_EVAL_TOLERANCE, PAIR_TOLERANCE, TRIPLE_TOLERANCE
from src.exact import RadialPoly
from src.numeric import (
    ball_grid,
    brute_force_f,
    brute_force_g,
    brute_force_h,
    brute_force_k,
    brute_force_u,
    cross_eval_2d,
    cross_eval_3d,
    eval_radial,
    fhat_residual,
    gauss_legendre,
    i_theta_numeric,
    integrate_unit,
    ortho_check_2d,
    ortho_check_3d,
    rounding_bound,
    sample_ball,
    sample_disk,
    sphere_grid,
    sphere_orthonormality,
    ylm_polar,
)
from src.types import Index2D, Index3D, NollIndex, SphIndex
from src.utils.errors import InvalidArgumentError
from src.zernike2d import g_coeff, h_coeff, radial_2d
from src.zernike3d import I_theta, f_coeff, k_coeff, radial_3d, u_coeff


# ============= QUADRATURE =============


def test_gauss_legendre_is_exact_for_polynomials():
    rule = gauss_legendre(8)
    assert rule.weights.sum() == pytest.approx(2.0)
    assert integrate_unit(lambda r: r**15, rule) == pytest.approx(1 / 16, abs=1e-15)


def test_gauss_legendre_rejects_empty_rule():
    with pytest.raises(InvalidArgumentError):
        gauss_legendre(0)


def test_grids_have_the_right_measure():
    _, _, w = sphere_grid(8)
    assert w.sum() == pytest.approx(4 * np.pi)
    x, y, z, w = ball_grid(8)
    assert w.sum() == pytest.approx(4 * np.pi / 3)
    assert np.sum(w * x**2) == pytest.approx(4 * np.pi / 15)


# ============= RADIAL ORACLES =============


def test_eval_radial():
    assert eval_radial(radial_2d(Index2D(4, 2)), 1.0) == pytest.approx(1.0)
    assert eval_radial(radial_2d(Index2D(2, 0)), 0.5) == pytest.approx(-0.5)
    assert eval_radial(radial_3d(Index3D(2, 0)), 1.0) == pytest.approx(np.sqrt(7))


@pytest.mark.parametrize("n, n2, m", [(2, 2, 0), (2, 4, 0), (3, 5, 1), (9, 9, 1)])
def test_ortho_check_2d(rule, n, n2, m):
    assert ortho_check_2d(n, n2, m, rule) <= PAIR_TOLERANCE


@pytest.mark.parametrize("n, n2, m", [(14, 16, 0), (16, 16, 0), (16, 16, 2)])
def test_ortho_check_2d_high_degree_within_rounding_bound(rule, n, n2, m):
    p, q = radial_2d(Index2D(n, m)), radial_2d(Index2D(n2, m))
    assert ortho_check_2d(n, n2, m, rule) <= PAIR_TOLERANCE + rounding_bound(p, q)


def test_rounding_bound_tracks_coefficient_growth():
    assert rounding_bound(RadialPoly({0: 1})) < 1e-15
    low, high = radial_2d(Index2D(4, 0)), radial_2d(Index2D(16, 0))
    assert rounding_bound(low) < PAIR_TOLERANCE < rounding_bound(high)


@pytest.mark.parametrize("n, n2, l", [(3, 3, 1), (2, 4, 0), (6, 4, 2)])
def test_ortho_check_3d(rule, n, n2, l):
    assert ortho_check_3d(n, n2, l, rule) <= PAIR_TOLERANCE


def test_brute_force_single_coefficients(rule):
    h = float(h_coeff(6, Index2D(4, 2)))
    assert brute_force_h(6, Index2D(4, 2), rule) == pytest.approx(h, abs=1e-13)
    f = float(f_coeff(10, Index3D(6, 0)))
    assert brute_force_f(10, Index3D(6, 0), rule) == pytest.approx(f, abs=1e-13)
    assert fhat_residual(4, 6, rule) <= 1e-11


def test_brute_force_triples(rule):
    i1, i2, i3 = Index2D(3, 1), Index2D(5, 3), Index2D(6, 2)
    g = float(g_coeff(i1, i2, i3))
    assert brute_force_g(i1, i2, i3, rule) == pytest.approx(g, abs=TRIPLE_TOLERANCE)
    j1, j3 = Index3D(1, 1), Index3D(2, 0)
    k = brute_force_k(j1, j1, j3, rule)
    assert k == pytest.approx(0.7559289460184544, abs=TRIPLE_TOLERANCE)
    assert k == pytest.approx(float(k_coeff(j1, j1, j3)), abs=TRIPLE_TOLERANCE)


# ============= ANGULAR ORACLES =============


def test_i_theta_numeric(rule):
    for l in range(4):
        for m in range(-l, l + 1):
            for k in range(abs(m) % 2, 5, 2):
                expected = float(I_theta(k, 1, l, m))
                assert i_theta_numeric(k, 1, l, m, rule) == pytest.approx(expected, abs=1e-13)


def test_ylm_polar_matches_cartesian_form():
    theta = np.array([0.3, 1.1, 2.0])
    phi = np.array([0.1, 2.5, -1.2])
    values = ylm_polar(SphIndex(1, 1), theta, phi)
    expected = -np.sqrt(3 / (8 * np.pi)) * np.sin(theta) * np.exp(1j * phi)
    assert np.allclose(values, expected, atol=1e-14)
    negative = ylm_polar(SphIndex(1, -1), theta, phi)
    assert np.allclose(negative, -np.conj(values), atol=1e-14)


def test_sphere_orthonormality():
    assert sphere_orthonormality(6) <= 1e-10


def test_brute_force_u():
    idx = Index3D(2, 2)
    exact = u_coeff(1, 1, 0, idx, 2).to_complex()
    assert brute_force_u(1, 1, 0, idx, 2) == pytest.approx(exact, abs=1e-12)


# ============= CROSS EVALUATION =============


def test_samples_are_reproducible_and_inside():
    disk = sample_disk(50, seed=7)
    assert np.array_equal(disk, sample_disk(50, seed=7))
    assert np.all(np.hypot(disk[:, 0], disk[:, 1]) <= 1.0)
    ball = sample_ball(50, seed=7)
    assert np.all(np.linalg.norm(ball, axis=1) <= 1.0 + 1e-15)


@pytest.mark.parametrize("j", [1, 4, 6, 11, 14, 22, 45, 46, 55])
def test_cross_eval_2d(j):
    assert cross_eval_2d(NollIndex(j), sample_disk()) <= CROSS_EVAL_TOLERANCE


@pytest.mark.parametrize(
    "n, l, m",
    [(0, 0, 0), (2, 2, -1), (4, 4, 4), (5, 5, 3), (6, 2, -2), (7, 7, 7), (7, 3, -2), (7, 1, 0)],
)
def test_cross_eval_3d(n, l, m):
    re_gap, im_gap = cross_eval_3d(n, l, m, sample_ball())
    assert re_gap <= CROSS_EVAL_TOLERANCE
    assert im_gap <= CROSS_EVAL_TOLERANCE
