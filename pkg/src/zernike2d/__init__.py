"""Zernike circle functions: radial polynomials, Noll indexing, transforms, products."""

from .noll import noll_normalization, noll_pack, noll_unpack
from .product import angular_product, g_coeff, g_via_linear_system, product_expand_2d
from .radial import (
    h_coeff,
    h_recur_j,
    h_recur_m,
    h_recur_n,
    power_to_radial_2d,
    radial_2d,
    radial_2d_alt,
)
from .transform import (
    cart_monomial_to_zernike_2d,
    dangling_constant,
    expansion_to_cart_2d,
    rj_trig_to_cart,
    trig_power_expand,
    zernike_to_cart_2d,
)

__all__ = [
    "angular_product",
    "cart_monomial_to_zernike_2d",
    "dangling_constant",
    "expansion_to_cart_2d",
    "g_coeff",
    "g_via_linear_system",
    "h_coeff",
    "h_recur_j",
    "h_recur_m",
    "h_recur_n",
    "noll_normalization",
    "noll_pack",
    "noll_unpack",
    "power_to_radial_2d",
    "product_expand_2d",
    "radial_2d",
    "radial_2d_alt",
    "rj_trig_to_cart",
    "trig_power_expand",
    "zernike_to_cart_2d",
]
