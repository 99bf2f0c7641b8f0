"""Coefficient table generation for every family."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from ...config import Settings
from ...constants import DEFAULT_RANGES
from ...exact.surd import SurdSum
from ...types import Index2D, Index3D, NollIndex, SphIndex
from ...utils.errors import InvalidArgumentError, UsageError
from ...utils.rendering import (
    TableRow,
    TableTerm,
    cart2_terms,
    cart3_terms,
    monomial_text,
    power_text,
    r2_text,
    r3_text,
    radial_terms,
    render_table,
    trig_text,
    y_text,
    z3_text,
)
from ...zernike2d import (
    cart_monomial_to_zernike_2d,
    noll_normalization,
    noll_unpack,
    power_to_radial_2d,
    product_expand_2d,
    radial_2d,
    rj_trig_to_cart,
    trig_power_expand,
)
from ...zernike2d.noll import noll_count
from ...zernike2d.transform import zernike_term_to_cart
from ...zernike3d import (
    cart_monomial_to_zernike_3d,
    power_to_radial_3d,
    power_to_radial_3d_fixed_n,
    product_expand_3d,
    radial_3d,
    y_product_expand,
    ylm_cart,
    zernike3d_to_cart,
)

logger = logging.getLogger(__name__)

Key = Tuple[Any, ...]
Params = Dict[str, Optional[int]]


@dataclass(frozen=True)
class Family:
    """Key enumeration and row construction of one coefficient table."""

    name: str
    keys: Callable[[Params], List[Key]]
    row: Callable[[Key], TableRow]
    ranges: Tuple[str, ...]


# ============= KEY ENUMERATION =============


def _parity_pairs(top: int) -> List[Key]:
    """(n, m) with 0 <= m <= n <= top and n - m even."""
    return [(n, m) for n in range(top + 1) for m in range(n % 2, n + 1, 2)]


def _monomials(top: int, dims: int) -> List[Key]:
    """Exponent tuples by total degree 0..top, higher leading powers first."""
    out: List[Key] = []
    for j in range(top + 1):
        if dims == 2:
            out.extend((j - q, q) for q in range(j + 1))
        else:
            for p in range(j, -1, -1):
                out.extend((p, q, j - p - q) for q in range(j - p, -1, -1))
    return out


def _matches(value: int, wanted: Optional[int]) -> bool:
    return wanted is None or value == wanted


def _check_product_filters(params: Params, top: int, dim: int) -> None:
    """Reject index filters that no key in range can match."""
    second = "m" if dim == 2 else "l"
    for i in (1, 2):
        n, a = params.get(f"n{i}"), params.get(f"{second}{i}")
        context = {f"n{i}": n, f"{second}{i}": a, "nmax": top}
        if n is not None and not 0 <= n <= top:
            raise InvalidArgumentError(f"--n{i} must lie in [0, --nmax]", context)
        if a is not None and a < 0:
            raise InvalidArgumentError(f"--{second}{i} must be >= 0", context)
        if n is not None and a is not None and (a > n or (n - a) % 2):
            raise InvalidArgumentError(
                f"--{second}{i} must not exceed --n{i} and n{i} - {second}{i} must be even",
                context,
            )


def _product_keys(params: Params, top: int, dim: int) -> List[Key]:
    """(n1, a1, n2, a2, a3) with (n1, a1) <= (n2, a2); a = m in 2D, l in 3D."""
    _check_product_filters(params, top, dim)
    second = "m" if dim == 2 else "l"
    pairs = _parity_pairs(top)
    keys: List[Key] = []
    for n1, a1 in pairs:
        for n2, a2 in pairs:
            if (n1, a1) > (n2, a2):
                continue
            if not (
                _matches(n1, params.get("n1"))
                and _matches(a1, params.get(f"{second}1"))
                and _matches(n2, params.get("n2"))
                and _matches(a2, params.get(f"{second}2"))
            ):
                continue
            if dim == 2:
                targets = sorted({abs(a1 - a2), a1 + a2})
            else:
                targets = list(range(abs(a1 - a2), a1 + a2 + 1, 2))
            keys.extend(
                (n1, a1, n2, a2, a3) for a3 in targets if _matches(a3, params.get(f"{second}3"))
            )
    return keys


def _top(params: Params, name: str, family: str) -> int:
    value = params.get(name)
    if value is None:
        value = DEFAULT_RANGES[family][name]
    if value < 0:
        raise UsageError(f"--{name} must be >= 0", {"family": family, name: value})
    return value


# ============= ROWS =============


def _kind_basis(n: int, m: int, kind: str) -> str:
    trig = trig_text(kind, m)
    return f"{r2_text(n, m)}*{trig}" if trig else r2_text(n, m)


def _radial2d_row(key: Key) -> TableRow:
    n, m = key
    return TableRow("radial2d", key, r2_text(n, m), radial_terms(radial_2d(Index2D(n, m))))


def _h_row(key: Key) -> TableRow:
    j, m = key
    terms = [TableTerm((n,), r2_text(n, m), h) for n, h in power_to_radial_2d(j, m).items()]
    return TableRow("h", key, power_text("r", j) or "1", terms)


def _noll_row(key: Key) -> TableRow:
    j = NollIndex(key[0])
    idx, kind = noll_unpack(j)
    basis = _kind_basis(idx.n, idx.m, kind.kind)
    term = TableTerm((idx.n, idx.m, kind.kind), basis, noll_normalization(j))
    return TableRow("noll", key, f"Z_{j.j}", [term])


def _trig_row(key: Key) -> TableRow:
    p, q = key
    label = " ".join(f"{t} phi" for t in (power_text("cos", p), power_text("sin", q)) if t) or "1"
    expansion = trig_power_expand(p, q)
    terms = [
        TableTerm((kind.kind, kind.m), trig_text(kind.kind, kind.m), c)
        for kind, c in sorted(expansion.items(), key=lambda kv: kv[0].m)
    ]
    return TableRow("trig", key, label, terms)


def _rjcart_row(key: Key) -> TableRow:
    j, m, kind = key
    trig = trig_text(kind, m)
    label = " ".join(t for t in (power_text("r", j), trig) if t) or "1"
    return TableRow("rjcart", key, label, cart2_terms(rj_trig_to_cart(j, m, kind)))


def _cart2z2d_row(key: Key) -> TableRow:
    p, q = key
    expansion = cart_monomial_to_zernike_2d(p, q)
    terms = [
        TableTerm((n, m, kind), _kind_basis(n, m, kind), c) for (n, m, kind), c in expansion.items()
    ]
    return TableRow("cart2z2d", key, monomial_text(key, ("x", "y")) or "1", terms)


def _z2cart2d_row(key: Key) -> TableRow:
    j = NollIndex(key[0])
    idx, kind = noll_unpack(j)
    inverse = noll_normalization(j).inverse()
    label = f"{_kind_basis(idx.n, idx.m, kind.kind)} = {inverse.render()}*Z_{j.j}"
    return TableRow("z2cart2d", key, label, cart2_terms(zernike_term_to_cart(idx, kind.kind)))


def _g_row(key: Key) -> TableRow:
    n1, m1, n2, m2, m3 = key
    expansion = product_expand_2d(Index2D(n1, m1), Index2D(n2, m2), m3)
    terms = [TableTerm((n3,), r2_text(n3, m3), g) for n3, g in expansion.items()]
    return TableRow("g", key, f"{r2_text(n1, m1)}*{r2_text(n2, m2)}", terms)


def _radial3d_row(key: Key) -> TableRow:
    n, l = key
    return TableRow("radial3d", key, r3_text(n, l), radial_terms(radial_3d(Index3D(n, l))))


def _f_row(key: Key) -> TableRow:
    j, l = key
    terms = [TableTerm((n,), r3_text(n, l), f) for n, f in power_to_radial_3d(j, l).items()]
    return TableRow("f", key, power_text("r", j) or "1", terms)


def _fhat_row(key: Key) -> TableRow:
    j, n = key
    scale = SurdSum.sqrt(2 * n + 3).inverse()
    fhat = power_to_radial_3d_fixed_n(j, n)
    terms = [
        TableTerm((l,), r3_text(n, l, with_arg=False), c * scale)
        for l, c in sorted(fhat.items(), reverse=True)
    ]
    return TableRow("fhat", key, f"r^{j} / {2 * n + 3}^(1/2)", terms)


def _ylmcart_row(key: Key) -> TableRow:
    l, m = key
    return TableRow(
        "ylmcart",
        key,
        f"Pi^(1/2) r^{l} {y_text(l, m)}",
        cart3_terms(ylm_cart(SphIndex(l, m))),
        complex_split=True,
    )


def _z3dcart_row(key: Key) -> TableRow:
    n, l, m = key
    return TableRow(
        "z3dcart",
        key,
        f"Pi^(1/2) {z3_text(n, l, m)}",
        cart3_terms(zernike3d_to_cart(n, l, m)),
        complex_split=True,
    )


def _u_row(key: Key) -> TableRow:
    expansion = cart_monomial_to_zernike_3d(*key)
    terms = [TableTerm((n, l, m), z3_text(n, l, m), c) for (n, l, m), c in expansion.items()]
    return TableRow("u", key, f"{monomial_text(key) or '1'} / Pi^(1/2)", terms)


def _yprod_row(key: Key) -> TableRow:
    l1, m1, l2, m2 = key
    expansion = y_product_expand(SphIndex(l1, m1), SphIndex(l2, m2))
    terms = [TableTerm((i.l, i.m), y_text(i.l, i.m), c) for i, c in sorted(expansion.items())]
    return TableRow("yprod", key, f"Pi^(1/2) {y_text(l1, m1)} {y_text(l2, m2)}", terms)


def _k_row(key: Key) -> TableRow:
    n1, l1, n2, l2, l3 = key
    expansion = product_expand_3d(Index3D(n1, l1), Index3D(n2, l2), l3)
    terms = [TableTerm((n3,), r3_text(n3, l3), k) for n3, k in expansion.items()]
    return TableRow("k", key, f"{r3_text(n1, l1)}*{r3_text(n2, l2)}", terms)


FAMILIES: Dict[str, Family] = {
    f.name: f
    for f in [
        Family(
            "radial2d",
            lambda p: _parity_pairs(_top(p, "nmax", "radial2d")),
            _radial2d_row,
            ("nmax",),
        ),
        Family("h", lambda p: _parity_pairs(_top(p, "jmax", "h")), _h_row, ("jmax",)),
        Family(
            "noll",
            lambda p: [(j,) for j in range(1, noll_count(_top(p, "nmax", "noll")) + 1)],
            _noll_row,
            ("nmax",),
        ),
        Family("trig", lambda p: _monomials(_top(p, "jmax", "trig"), 2), _trig_row, ("jmax",)),
        Family(
            "rjcart",
            lambda p: [
                (j, m, kind)
                for j, m in _parity_pairs(_top(p, "jmax", "rjcart"))
                for kind in (("cos", "sin") if m else ("cos",))
            ],
            _rjcart_row,
            ("jmax",),
        ),
        Family(
            "cart2z2d",
            lambda p: _monomials(_top(p, "jmax", "cart2z2d"), 2),
            _cart2z2d_row,
            ("jmax",),
        ),
        Family(
            "z2cart2d",
            lambda p: [(j,) for j in range(1, noll_count(_top(p, "nmax", "z2cart2d")) + 1)],
            _z2cart2d_row,
            ("nmax",),
        ),
        Family(
            "g",
            lambda p: _product_keys(p, _top(p, "nmax", "g"), 2),
            _g_row,
            ("nmax", "n1", "m1", "n2", "m2", "m3"),
        ),
        Family(
            "radial3d",
            lambda p: _parity_pairs(_top(p, "nmax", "radial3d")),
            _radial3d_row,
            ("nmax",),
        ),
        Family("f", lambda p: _parity_pairs(_top(p, "jmax", "f")), _f_row, ("jmax",)),
        Family(
            "fhat",
            lambda p: [(j, n) for n, j in _parity_pairs(_top(p, "nmax", "fhat"))],
            _fhat_row,
            ("nmax",),
        ),
        Family(
            "ylmcart",
            lambda p: [(l, m) for l in range(_top(p, "lmax", "ylmcart") + 1) for m in range(l + 1)],
            _ylmcart_row,
            ("lmax",),
        ),
        Family(
            "z3dcart",
            lambda p: [
                (n, l, m)
                for n, l in _parity_pairs(_top(p, "nmax", "z3dcart"))
                for m in range(l + 1)
            ],
            _z3dcart_row,
            ("nmax",),
        ),
        Family("u", lambda p: _monomials(_top(p, "jmax", "u"), 3), _u_row, ("jmax",)),
        Family(
            "yprod",
            lambda p: [
                (l1, m1, l2, m2)
                for l1 in range(_top(p, "lmax", "yprod") + 1)
                for m1 in range(-l1, l1 + 1)
                for l2 in range(l1 + 1)
                for m2 in range(-l2, l2 + 1)
                if (l2, m2) <= (l1, m1)
            ],
            _yprod_row,
            ("lmax",),
        ),
        Family(
            "k",
            lambda p: _product_keys(p, _top(p, "nmax", "k"), 3),
            _k_row,
            ("nmax", "n1", "l1", "n2", "l2", "l3"),
        ),
    ]
}


def get_family(name: str) -> Family:
    """Look up a family or raise a usage error."""
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}", {"known": sorted(FAMILIES)})
    return FAMILIES[name]


def build_rows(family: str, params: Params, settings: Settings) -> List[TableRow]:
    """
    Generate every row of a family in key order.

    Rows are built on a thread pool of ``settings.threads`` workers; ``map``
    keeps the output order independent of the worker count.

    Args:
        family: Family name
        params: Range parameters (None means default)
        settings: Runtime settings

    Returns:
        Rows in key order
    """
    spec = get_family(family)
    keys = spec.keys(params)
    logger.debug("table %s: %d rows on %d threads", family, len(keys), settings.threads)
    if settings.threads == 1:
        return [spec.row(key) for key in keys]
    with ThreadPoolExecutor(max_workers=settings.threads) as pool:
        return list(pool.map(spec.row, keys))


def cmd_table(family: str, params: Params, fmt: str, settings: Settings) -> str:
    """
    Render a coefficient table.

    Args:
        family: Family name
        params: Range parameters
        fmt: "text" or "json"
        settings: Runtime settings

    Returns:
        Rendered table

    Raises:
        UsageError: Unknown family, format or range
    """
    if fmt not in ("text", "json"):
        raise UsageError(f"unknown format {fmt!r}")
    return render_table(build_rows(family, params, settings), fmt)
