"""Conversion command between Cartesian monomials and Zernike functions."""

import logging
from typing import Optional, Sequence

from ...types import NollIndex
from ...utils.errors import UsageError, ZernikeError
from ...utils.rendering import TableRow, cart2_terms, render_table
from ...zernike2d import zernike_to_cart_2d
from .table import get_family

logger = logging.getLogger(__name__)

DIRECTIONS = ("cart2zern", "zern2cart")


def _require(values: Optional[Sequence[int]], size: int, flag: str) -> tuple:
    if values is None or len(values) != size:
        raise UsageError(f"{flag} needs {size} comma-separated integers", {flag: values})
    return tuple(values)


def _zern2cart_2d_row(j: int) -> TableRow:
    poly = zernike_to_cart_2d(NollIndex(j))
    return TableRow("z2cart2d", (j,), f"Z_{j}", cart2_terms(poly))


def convert_row(
    direction: str,
    dim: int,
    noll: Optional[int] = None,
    monomial: Optional[Sequence[int]] = None,
    index: Optional[Sequence[int]] = None,
) -> TableRow:
    """
    Build the single row of a conversion.

    Args:
        direction: "cart2zern" or "zern2cart"
        dim: 2 or 3
        noll: Noll index (zern2cart, dim 2)
        monomial: Exponents p,q or p,q,t (cart2zern)
        index: n,l,m (zern2cart, dim 3)

    Returns:
        TableRow

    Raises:
        UsageError: Missing or malformed index, or an index violating its parity rules
    """
    if direction not in DIRECTIONS:
        raise UsageError(f"unknown direction {direction!r}", {"known": list(DIRECTIONS)})
    if dim not in (2, 3):
        raise UsageError("--dim must be 2 or 3", {"dim": dim})
    try:
        if direction == "cart2zern":
            key = _require(monomial, dim, "--monomial")
            if min(key) < 0:
                raise UsageError("monomial exponents must be >= 0", {"monomial": list(key)})
            return get_family("cart2z2d" if dim == 2 else "u").row(key)
        if dim == 2:
            if noll is None:
                raise UsageError("zern2cart --dim 2 needs --noll")
            return _zern2cart_2d_row(noll)
        return get_family("z3dcart").row(_require(index, 3, "--index"))
    except UsageError:
        raise
    except ZernikeError as e:
        raise UsageError(e.message, e.context) from e


def cmd_convert(
    direction: str,
    dim: int,
    fmt: str = "text",
    noll: Optional[int] = None,
    monomial: Optional[Sequence[int]] = None,
    index: Optional[Sequence[int]] = None,
) -> str:
    """Render one conversion in text or JSON."""
    if fmt not in ("text", "json"):
        raise UsageError(f"unknown format {fmt!r}")
    row = convert_row(direction, dim, noll=noll, monomial=monomial, index=index)
    logger.debug("convert %s dim=%d: %d terms", direction, dim, len(row.terms))
    return render_table([row], fmt)
