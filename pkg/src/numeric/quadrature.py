"""Gauss-Legendre rules and product grids on the disk, ball and sphere."""

from functools import lru_cache
from typing import Callable, Tuple

import numpy as np
from numpy.polynomial import legendre

from ..constants import DEFAULT_GRID_ORDER, DEFAULT_QUADRATURE_ORDER
from ..types import QuadratureRule
from ..utils.errors import InvalidArgumentError


@lru_cache(maxsize=None)
def gauss_legendre(order: int = DEFAULT_QUADRATURE_ORDER) -> QuadratureRule:
    """
    Nodes and weights on (-1, 1), exact for polynomials of degree <= 2 * order - 1.

    Args:
        order: Node count

    Returns:
        QuadratureRule with increasing nodes
    """
    if order < 1:
        raise InvalidArgumentError("quadrature order must be >= 1", {"order": order})
    nodes, weights = legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights, order=order)


def integrate_unit(fn: Callable[[np.ndarray], np.ndarray], rule: QuadratureRule) -> float:
    """Integral of ``fn`` over [0, 1]."""
    r, w = rule.mapped_to_unit()
    return float(np.sum(w * fn(r)))


def sphere_grid(order: int = DEFAULT_GRID_ORDER) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Gauss-Legendre in cos(theta) times the trapezoid rule in phi.

    The phi rule uses 2 * order equispaced points, exact for exp(i k phi) with |k| < 2 * order.

    Returns:
        (theta, phi, weights) as flat arrays; weights sum to 4 pi
    """
    rule = gauss_legendre(order)
    n_phi = 2 * order
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    theta = np.arccos(rule.nodes)
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    ww = np.outer(rule.weights, np.full(n_phi, 2 * np.pi / n_phi))
    return tt.ravel(), pp.ravel(), ww.ravel()


def ball_grid(
    order: int = DEFAULT_GRID_ORDER,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Product rule on the unit ball: Gauss-Legendre in r (weight r^2) and the sphere grid.

    Returns:
        (x, y, z, weights) as flat arrays; weights sum to 4 pi / 3
    """
    r, wr = gauss_legendre(order).mapped_to_unit()
    theta, phi, ws = sphere_grid(order)
    rr = r[:, None]
    x = (rr * (np.sin(theta) * np.cos(phi))[None, :]).ravel()
    y = (rr * (np.sin(theta) * np.sin(phi))[None, :]).ravel()
    z = (rr * np.cos(theta)[None, :]).ravel()
    w = ((wr * r**2)[:, None] * ws[None, :]).ravel()
    return x, y, z, w
