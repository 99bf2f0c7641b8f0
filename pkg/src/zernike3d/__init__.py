"""Zernike ball functions: radial polynomials, harmonics, transforms, coupling."""

from .coupling import (
    clebsch_gordan,
    k_coeff,
    product_expand_3d,
    wigner3j,
    wigner_symmetry_check,
    y_product_expand,
    y_product_gaunt,
)
from .harmonics import (
    ball_integral,
    ball_monomial_integral,
    disk_monomial_integral,
    expansion_to_cart_3d,
    ylm_cart,
    zernike3d_to_cart,
)
from .radial import (
    f_coeff,
    f_recur_j,
    f_recur_l,
    f_recur_n,
    power_to_radial_3d,
    power_to_radial_3d_fixed_n,
    radial_3d,
    radial_3d_alt,
)
from .transform import (
    I_phi,
    I_phi_recur,
    I_r,
    I_theta,
    cart_monomial_to_zernike_3d,
    project_monomial_3d,
    u_coeff,
)

__all__ = [
    "I_phi",
    "I_phi_recur",
    "I_r",
    "I_theta",
    "ball_integral",
    "ball_monomial_integral",
    "cart_monomial_to_zernike_3d",
    "clebsch_gordan",
    "disk_monomial_integral",
    "expansion_to_cart_3d",
    "f_coeff",
    "f_recur_j",
    "f_recur_l",
    "f_recur_n",
    "k_coeff",
    "power_to_radial_3d",
    "power_to_radial_3d_fixed_n",
    "product_expand_3d",
    "project_monomial_3d",
    "radial_3d",
    "radial_3d_alt",
    "u_coeff",
    "wigner3j",
    "wigner_symmetry_check",
    "y_product_expand",
    "y_product_gaunt",
    "ylm_cart",
    "zernike3d_to_cart",
]
