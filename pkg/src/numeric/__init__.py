"""Numeric oracles: quadrature and floating-point cross-checks."""

from .oracles import (
    brute_force_f,
    brute_force_g,
    brute_force_h,
    brute_force_k,
    brute_force_u,
    cross_eval_2d,
    cross_eval_3d,
    eval_radial,
    fhat_residual,
    i_theta_numeric,
    ortho_check_2d,
    ortho_check_3d,
    rounding_bound,
    sample_ball,
    sample_disk,
    sphere_orthonormality,
    ylm_polar,
)
from .quadrature import ball_grid, gauss_legendre, integrate_unit, sphere_grid

__all__ = [
    "ball_grid",
    "brute_force_f",
    "brute_force_g",
    "brute_force_h",
    "brute_force_k",
    "brute_force_u",
    "cross_eval_2d",
    "cross_eval_3d",
    "eval_radial",
    "fhat_residual",
    "gauss_legendre",
    "i_theta_numeric",
    "integrate_unit",
    "ortho_check_2d",
    "ortho_check_3d",
    "rounding_bound",
    "sample_ball",
    "sample_disk",
    "sphere_grid",
    "sphere_orthonormality",
    "ylm_polar",
]
