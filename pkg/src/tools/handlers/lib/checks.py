"""Verification suites: exact identities, numeric oracles and fixture comparison."""

import logging
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

from ....constants import (
    CROSS_EVAL_TOLERANCE,
    DEFAULT_QUADRATURE_ORDER,
    DEFAULT_SAMPLES,
    ORACLE_NMAX,
    ORACLE_NMAX_BY_FAMILY,
    PAIR_TOLERANCE,
    SPHERE_TOLERANCE,
    TRIPLE_TOLERANCE,
)
from ....exact.poly import CartPoly2, CartPoly3
from ....exact.special import sign
from ....exact.surd import ComplexSurd, SurdSum
from ....numeric import (
    brute_force_f,
    brute_force_g,
    brute_force_h,
    brute_force_k,
    brute_force_u,
    cross_eval_2d,
    cross_eval_3d,
    fhat_residual,
    gauss_legendre,
    i_theta_numeric,
    ortho_check_2d,
    ortho_check_3d,
    rounding_bound,
    sample_ball,
    sample_disk,
    sphere_orthonormality,
)
from ....types import (
    FIXTURE_FAMILIES,
    CheckResult,
    FixtureEntry,
    Index2D,
    Index3D,
    NollIndex,
    QuadratureRule,
    SphIndex,
    SuiteReport,
)
from ....utils.errors import ZernikeError
from ....utils.parser import load_fixtures
from ....zernike2d import (
    cart_monomial_to_zernike_2d,
    expansion_to_cart_2d,
    g_coeff,
    g_via_linear_system,
    h_coeff,
    h_recur_j,
    h_recur_m,
    h_recur_n,
    noll_normalization,
    noll_pack,
    noll_unpack,
    power_to_radial_2d,
    product_expand_2d,
    radial_2d,
    radial_2d_alt,
    rj_trig_to_cart,
    trig_power_expand,
    zernike_to_cart_2d,
)
from ....zernike2d.noll import noll_count
from ....zernike2d.transform import zernike_term_to_cart
from ....zernike3d import (
    I_phi,
    I_phi_recur,
    I_theta,
    cart_monomial_to_zernike_3d,
    disk_monomial_integral,
    expansion_to_cart_3d,
    f_coeff,
    f_recur_j,
    f_recur_l,
    f_recur_n,
    k_coeff,
    power_to_radial_3d,
    power_to_radial_3d_fixed_n,
    product_expand_3d,
    project_monomial_3d,
    radial_3d,
    radial_3d_alt,
    u_coeff,
    wigner_symmetry_check,
    y_product_expand,
    y_product_gaunt,
    ylm_cart,
    zernike3d_to_cart,
)

logger = logging.getLogger(__name__)


def _exact(name: str, key: Tuple[Any, ...], ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name=name, key=key, passed=bool(ok), detail="" if ok else detail)


def _numeric(name: str, key: Tuple[Any, ...], residual: float, tolerance: float) -> CheckResult:
    return CheckResult(name=name, key=key, passed=residual <= tolerance, residual=residual)


def finish(report: SuiteReport) -> SuiteReport:
    """Log the suite summary and each failure."""
    failures = report.failures
    logger.info(
        "suite %s: %d checks, %d passed, %d failed",
        report.suite,
        len(report.results),
        len(report.results) - len(failures),
        len(failures),
    )
    for failure in failures:
        logger.warning("suite %s failed: %s", report.suite, failure.render())
    return report


def _pairs(top: int) -> List[Tuple[int, int]]:
    return [(n, m) for n in range(top + 1) for m in range(n % 2, n + 1, 2)]


# ============= ORTHO =============


def _disk_integral(poly: CartPoly2) -> SurdSum:
    total = SurdSum()
    for (a, b), c in poly.items():
        weight = disk_monomial_integral(a, b)
        if weight:
            total = total + c * weight
    return total


def check_ortho_2d(nmax: int, noll_nmax: int = 4) -> SuiteReport:
    """
    Exact and numeric orthogonality of R_n^m, special values, both closed forms,
    and exact Noll orthonormality integral Z_j Z_k = pi delta over the disk.
    """
    report = SuiteReport("ortho-2d")
    rule = gauss_legendre()
    for n, m in _pairs(nmax):
        idx = Index2D(n, m)
        p = radial_2d(idx)
        report.results.append(_exact("radial-forms", (n, m), p == radial_2d_alt(idx)))
        report.results.append(_exact("radial-at-one", (n, m), p.at_one() == 1))
        for n2 in range(n, nmax + 1, 2):
            q = radial_2d(Index2D(n2, m))
            integral = (p * q).weighted_integral(1)
            expected = Fraction(1, 2 * n + 2) if n == n2 else 0
            report.results.append(
                _exact("radial-ortho", (n, n2, m), integral == expected, str(integral))
            )
            report.results.append(
                _numeric(
                    "radial-ortho-quad",
                    (n, n2, m),
                    ortho_check_2d(n, n2, m, rule),
                    PAIR_TOLERANCE + rounding_bound(p, q),
                )
            )
    polys = {j: zernike_to_cart_2d(NollIndex(j)) for j in range(1, noll_count(noll_nmax) + 1)}
    for j, pj in polys.items():
        for k, pk in polys.items():
            if k < j:
                continue
            integral = _disk_integral(pj * pk)
            report.results.append(
                _exact("noll-ortho", (j, k), integral == (1 if j == k else 0), str(integral))
            )
    return finish(report)


def check_ortho_3d(nmax: int, sphere: bool = False, lmax: int = 6) -> SuiteReport:
    """
    Exact and numeric orthonormality of R_n^(l), special values and both forms.

    The sphere flag adds the Y_l^(m) Gram-matrix check up to lmax.
    """
    report = SuiteReport("ortho-3d")
    rule = gauss_legendre()
    for n, l in _pairs(nmax):
        idx = Index3D(n, l)
        p = radial_3d(idx)
        report.results.append(_exact("radial-forms", (n, l), p == radial_3d_alt(idx)))
        report.results.append(
            _exact("radial-at-one", (n, l), p.at_one() == SurdSum.sqrt(2 * n + 3))
        )
        for n2 in range(n, nmax + 1, 2):
            integral = (p * radial_3d(Index3D(n2, l))).weighted_integral(2)
            report.results.append(
                _exact("radial-ortho", (n, n2, l), integral == (1 if n == n2 else 0), str(integral))
            )
            report.results.append(
                _numeric(
                    "radial-ortho-quad", (n, n2, l), ortho_check_3d(n, n2, l, rule), PAIR_TOLERANCE
                )
            )
    if sphere:
        report.results.append(
            _numeric(
                "sphere-orthonormality", (lmax,), sphere_orthonormality(lmax), SPHERE_TOLERANCE
            )
        )
    return finish(report)


# ============= SUM RULES =============


def check_sumrules_2d(jmax: int, nmax_product: int) -> SuiteReport:
    """sum h = 1, sum g = 1, g closed form = linear-system route, trig sum at phi = 0."""
    report = SuiteReport("sumrules-2d")
    for j, m in _pairs(jmax):
        total = sum(power_to_radial_2d(j, m).values(), Fraction(0))
        report.results.append(_exact("h-sum", (j, m), total == 1, str(total)))
    for j in range(jmax + 1):
        for q in range(j + 1):
            p = j - q
            total = sum(
                (c for kind, c in trig_power_expand(p, q).items() if kind.kind != "sin"),
                Fraction(0),
            )
            report.results.append(
                _exact("trig-at-zero", (p, q), total == (1 if q == 0 else 0), str(total))
            )
    pairs = _pairs(nmax_product)
    for n1, m1 in pairs:
        for n2, m2 in pairs:
            if (n1, m1) > (n2, m2):
                continue
            for m3 in sorted({abs(m1 - m2), m1 + m2}):
                key = (n1, m1, n2, m2, m3)
                direct = product_expand_2d(Index2D(n1, m1), Index2D(n2, m2), m3)
                total = sum(direct.values(), Fraction(0))
                report.results.append(_exact("g-sum", key, total == 1, str(total)))
                routed = g_via_linear_system(Index2D(n1, m1), Index2D(n2, m2), m3)
                report.results.append(_exact("g-routes", key, direct == routed))
    return finish(report)


def check_sumrules_3d(jmax: int, nmax_product: int) -> SuiteReport:
    """sum sqrt(2n+3) f = 1, sqrt(2n+3) sum fhat = 1, k sum rule and k routes."""
    report = SuiteReport("sumrules-3d")
    for j, l in _pairs(jmax):
        total = SurdSum()
        for n, f in power_to_radial_3d(j, l).items():
            total = total + f * SurdSum.sqrt(2 * n + 3)
        report.results.append(_exact("f-sum", (j, l), total == 1, str(total)))
    for n, j in _pairs(jmax):
        total = SurdSum()
        for c in power_to_radial_3d_fixed_n(j, n).values():
            total = total + c
        total = total * SurdSum.sqrt(2 * n + 3)
        report.results.append(_exact("fhat-sum", (j, n), total == 1, str(total)))
    pairs = _pairs(nmax_product)
    for n1, l1 in pairs:
        for n2, l2 in pairs:
            if (n1, l1) > (n2, l2):
                continue
            expected = SurdSum.sqrt(2 * n1 + 3) * SurdSum.sqrt(2 * n2 + 3)
            for l3 in range(abs(l1 - l2), l1 + l2 + 1, 2):
                key = (n1, l1, n2, l2, l3)
                expansion = product_expand_3d(Index3D(n1, l1), Index3D(n2, l2), l3)
                total = SurdSum()
                for n3, k in expansion.items():
                    total = total + k * SurdSum.sqrt(2 * n3 + 3)
                report.results.append(_exact("k-sum", key, total == expected, str(total)))
                direct = {
                    n3: k_coeff(Index3D(n1, l1), Index3D(n2, l2), Index3D(n3, l3))
                    for n3 in range(l3, n1 + n2 + 1, 2)
                }
                direct = {n3: v for n3, v in direct.items() if v}
                report.results.append(_exact("k-routes", key, direct == expansion))
    return finish(report)


# ============= RECURRENCES =============


def check_recurrences_2d(jmax: int) -> SuiteReport:
    """The three h recurrences against the closed form on their valid grids."""
    report = SuiteReport("recurrences-2d")
    for j, m in _pairs(jmax):
        for n in range(m, j + 1, 2):
            h = h_coeff(j, Index2D(n, m))
            key = (j, n, m)
            if j + 2 <= jmax:
                report.results.append(
                    _exact("h-recur-j", key, h_recur_j(h, j, n, m) == h_coeff(j + 2, Index2D(n, m)))
                )
            if n + 2 <= j:
                report.results.append(
                    _exact("h-recur-n", key, h_recur_n(h, j, n, m) == h_coeff(j, Index2D(n + 2, m)))
                )
            if m + 2 <= n:
                report.results.append(
                    _exact("h-recur-m", key, h_recur_m(h, j, n, m) == h_coeff(j, Index2D(n, m + 2)))
                )
    return finish(report)


def check_recurrences_3d(jmax: int, phi_max: int = 4) -> SuiteReport:
    """The three f recurrences and the I_phi recurrence."""
    report = SuiteReport("recurrences-3d")
    for j, l in _pairs(jmax):
        for n in range(l, j + 1, 2):
            f = f_coeff(j, Index3D(n, l))
            key = (j, n, l)
            if j + 2 <= jmax:
                report.results.append(
                    _exact("f-recur-j", key, f_recur_j(f, j, n, l) == f_coeff(j + 2, Index3D(n, l)))
                )
            if n + 2 <= j:
                report.results.append(
                    _exact("f-recur-n", key, f_recur_n(f, j, n, l) == f_coeff(j, Index3D(n + 2, l)))
                )
            if l + 2 <= n:
                report.results.append(
                    _exact("f-recur-l", key, f_recur_l(f, j, n, l) == f_coeff(j, Index3D(n, l + 2)))
                )
    for p in range(phi_max + 1):
        for q in range(phi_max + 1):
            for m in range(-(p + q + 2), p + q + 3):
                report.results.append(
                    _exact("phi-recur", (p, q, m), I_phi_recur(p, q, m) == I_phi(p, q + 2, m))
                )
    return finish(report)


# ============= ROUND TRIPS =============


def check_roundtrip_2d(jmax: int, noll_nmax: int) -> SuiteReport:
    """Monomial -> Zernike -> monomial, and Noll pack/unpack."""
    report = SuiteReport("roundtrip-2d")
    for j in range(jmax + 1):
        for q in range(j + 1):
            p = j - q
            back = expansion_to_cart_2d(cart_monomial_to_zernike_2d(p, q))
            report.results.append(
                _exact("cart-zern-cart", (p, q), back == CartPoly2({(p, q): 1}), repr(back))
            )
    for j in range(1, noll_count(noll_nmax) + 1):
        idx, kind = noll_unpack(NollIndex(j))
        report.results.append(_exact("noll-pack", (j,), noll_pack(idx, kind).j == j))
    return finish(report)


def check_roundtrip_3d(jmax: int, project_jmax: int = 3, lmax: int = 6) -> SuiteReport:
    """Monomial -> Zernike -> monomial, u against direct projection, negative-m rule."""
    report = SuiteReport("roundtrip-3d")
    for p, q, t in _monomials_3d(jmax):
        back = expansion_to_cart_3d(cart_monomial_to_zernike_3d(p, q, t))
        report.results.append(
            _exact(
                "cart-zern-cart",
                (p, q, t),
                back == CartPoly3({(p, q, t): ComplexSurd(1)}),
                repr(back),
            )
        )
    for p, q, t in _monomials_3d(project_jmax):
        j = p + q + t
        for n, l in _pairs(j):
            for m in range(-l, l + 1):
                key = (p, q, t, n, l, m)
                idx = Index3D(n, l)
                ok = u_coeff(p, q, t, idx, m) == project_monomial_3d(p, q, t, idx, m)
                report.results.append(_exact("u-projection", key, ok))
    for n, l in _pairs(lmax):
        for m in range(1, l + 1):
            positive = zernike3d_to_cart(n, l, m)
            negative = zernike3d_to_cart(n, l, -m)
            report.results.append(
                _exact("negative-m", (n, l, m), negative == positive.conj().scale(sign(m)))
            )
    return finish(report)


def _monomials_3d(top: int) -> Iterable[Tuple[int, int, int]]:
    for j in range(top + 1):
        for p in range(j, -1, -1):
            for q in range(j - p, -1, -1):
                yield p, q, j - p - q


# ============= ORACLES =============

ORACLE_FAMILIES = ("h", "f", "fhat", "g", "k", "u", "itheta", "cross2d", "cross3d", "sphere")


def _oracle_h(nmax: int, report: SuiteReport, rule: QuadratureRule) -> None:
    for j, m in _pairs(nmax):
        for n, h in power_to_radial_2d(j, m).items():
            residual = abs(float(h) - brute_force_h(j, Index2D(n, m), rule))
            report.results.append(_numeric("h-oracle", (j, n, m), residual, TRIPLE_TOLERANCE))


def _oracle_f(nmax: int, report: SuiteReport, rule: QuadratureRule) -> None:
    for j, l in _pairs(nmax):
        for n, f in power_to_radial_3d(j, l).items():
            residual = abs(float(f) - brute_force_f(j, Index3D(n, l), rule))
            report.results.append(_numeric("f-oracle", (j, n, l), residual, TRIPLE_TOLERANCE))


def _oracle_fhat(nmax: int, report: SuiteReport, rule: QuadratureRule) -> None:
    for n, j in _pairs(nmax):
        report.results.append(
            _numeric("fhat-oracle", (j, n), fhat_residual(j, n, rule), TRIPLE_TOLERANCE)
        )


def _oracle_g(nmax: int, report: SuiteReport, rule: QuadratureRule) -> None:
    pairs = _pairs(nmax)
    for n1, m1 in pairs:
        for n2, m2 in pairs:
            if (n1, m1) > (n2, m2):
                continue
            for m3 in sorted({abs(m1 - m2), m1 + m2}):
                for n3 in range(m3, n1 + n2 + 1, 2):
                    idx = (Index2D(n1, m1), Index2D(n2, m2), Index2D(n3, m3))
                    residual = abs(float(g_coeff(*idx)) - brute_force_g(*idx, rule))
                    report.results.append(
                        _numeric("g-oracle", (n1, m1, n2, m2, n3, m3), residual, TRIPLE_TOLERANCE)
                    )


def _oracle_k(nmax: int, report: SuiteReport, rule: QuadratureRule) -> None:
    pairs = _pairs(nmax)
    for n1, l1 in pairs:
        for n2, l2 in pairs:
            if (n1, l1) > (n2, l2):
                continue
            for l3 in range(abs(l1 - l2), l1 + l2 + 1, 2):
                for n3 in range(l3, n1 + n2 + 1, 2):
                    idx = (Index3D(n1, l1), Index3D(n2, l2), Index3D(n3, l3))
                    residual = abs(float(k_coeff(*idx)) - brute_force_k(*idx, rule))
                    report.results.append(
                        _numeric("k-oracle", (n1, l1, n2, l2, n3, l3), residual, TRIPLE_TOLERANCE)
                    )


def _oracle_u(nmax: int, report: SuiteReport) -> None:
    for p, q, t in _monomials_3d(nmax):
        for (n, l, m), u in cart_monomial_to_zernike_3d(p, q, t).items():
            residual = abs(u.to_complex() - brute_force_u(p, q, t, Index3D(n, l), m))
            report.results.append(
                _numeric("u-oracle", (p, q, t, n, l, m), residual, TRIPLE_TOLERANCE)
            )


def _oracle_itheta(nmax: int, report: SuiteReport, rule: QuadratureRule) -> None:
    for l in range(nmax + 1):
        for m in range(-l, l + 1):
            for k in range(abs(m) % 2, nmax + 1, 2):
                for t in range(nmax + 1):
                    residual = abs(float(I_theta(k, t, l, m)) - i_theta_numeric(k, t, l, m, rule))
                    report.results.append(
                        _numeric("theta-oracle", (k, t, l, m), residual, TRIPLE_TOLERANCE)
                    )


def _oracle_cross2d(nmax: int, report: SuiteReport, seed: int) -> None:
    samples = sample_disk(DEFAULT_SAMPLES, seed)
    for j in range(1, noll_count(nmax) + 1):
        report.results.append(
            _numeric(
                "cross-eval-2d", (j,), cross_eval_2d(NollIndex(j), samples), CROSS_EVAL_TOLERANCE
            )
        )


def _oracle_cross3d(nmax: int, report: SuiteReport, seed: int) -> None:
    samples = sample_ball(DEFAULT_SAMPLES, seed)
    for n, l in _pairs(nmax):
        for m in range(-l, l + 1):
            gap = max(cross_eval_3d(n, l, m, samples))
            report.results.append(_numeric("cross-eval-3d", (n, l, m), gap, CROSS_EVAL_TOLERANCE))


def check_oracle(
    family: Optional[str],
    nmax: Optional[int],
    seed: int,
    order: int = DEFAULT_QUADRATURE_ORDER,
) -> SuiteReport:
    """
    Compare exact values with quadrature and cross-evaluation oracles.

    Args:
        family: One of ORACLE_FAMILIES, or None / "all" for every family
        nmax: Range bound for every family; None takes each family's default
        seed: Sample seed for the cross-evaluation families
        order: Gauss-Legendre order of the radial and polar oracles

    Returns:
        SuiteReport
    """
    report = SuiteReport("oracle")
    rule = gauss_legendre(order)
    report.notes.append(f"seed={seed}")
    families = ORACLE_FAMILIES if family in (None, "all") else (family,)
    runners: Dict[str, Callable[[int], None]] = {
        "h": lambda top: _oracle_h(top, report, rule),
        "f": lambda top: _oracle_f(top, report, rule),
        "fhat": lambda top: _oracle_fhat(top, report, rule),
        "g": lambda top: _oracle_g(top, report, rule),
        "k": lambda top: _oracle_k(top, report, rule),
        "u": lambda top: _oracle_u(top, report),
        "itheta": lambda top: _oracle_itheta(top, report, rule),
        "cross2d": lambda top: _oracle_cross2d(top, report, seed),
        "cross3d": lambda top: _oracle_cross3d(top, report, seed),
        "sphere": lambda top: report.results.append(
            _numeric(
                "sphere-orthonormality", (top,), sphere_orthonormality(top), SPHERE_TOLERANCE
            )
        ),
    }
    for name in families:
        top = nmax if nmax is not None else ORACLE_NMAX_BY_FAMILY.get(name, ORACLE_NMAX)
        logger.debug("oracle %s: nmax=%d", name, top)
        runners[name](top)
    return finish(report)


# ============= SYMMETRY =============


def _gaunt_agreement(lmax: int) -> List[Tuple[int, int, int, int]]:
    mismatched = []
    for l1, l2 in product(range(lmax + 1), repeat=2):
        for m1, m2 in product(range(-l1, l1 + 1), range(-l2, l2 + 1)):
            i1, i2 = SphIndex(l1, m1), SphIndex(l2, m2)
            tabulated, gaunt = y_product_expand(i1, i2), y_product_gaunt(i1, i2)
            same = set(tabulated) == set(gaunt) and all(
                tabulated[k].sign() == c.sign() for k, c in gaunt.items()
            )
            if not same:
                mismatched.append((l1, m1, l2, m2))
    return mismatched


def check_symmetry(jmax: int) -> SuiteReport:
    """3j permutation and reflection symmetries; Y-product terms and phases against Gaunt."""
    report = SuiteReport("symmetry")
    failures = wigner_symmetry_check(jmax)
    for args, rule in failures:
        key = (args.j1, args.j2, args.j3, args.m1, args.m2, args.m3)
        report.results.append(_exact(f"3j-{rule.replace(' ', '-')}", key, False, rule))
    report.results.append(
        _exact("3j-symmetries", (jmax,), not failures, f"{len(failures)} violations")
    )
    mismatched = _gaunt_agreement(jmax)
    report.results.append(
        _exact("yprod-gaunt", (jmax,), not mismatched, f"first mismatch {mismatched[:1]}")
    )
    return finish(report)


# ============= FIXTURES =============


def _rational_map(values: Dict[Any, Union[Fraction, int]]) -> Dict[Any, SurdSum]:
    return {k: SurdSum.rational(v) for k, v in values.items()}


def _noll_value(j: int) -> Tuple[SurdSum, Index2D, Any]:
    idx, kind = noll_unpack(NollIndex(j))
    return noll_normalization(NollIndex(j)), idx, kind


def _fhat_value(j: int, n: int) -> Dict[int, SurdSum]:
    scale = SurdSum.sqrt(2 * n + 3).inverse()
    return {l: c * scale for l, c in power_to_radial_3d_fixed_n(j, n).items()}


def _z2cart_value(j: int) -> CartPoly2:
    idx, kind = noll_unpack(NollIndex(j))
    return zernike_term_to_cart(idx, kind.kind)


GENERATORS: Dict[str, Callable[..., Any]] = {
    "radial2d": lambda n, m: radial_2d(Index2D(n, m)),
    "h": lambda j, m: _rational_map(power_to_radial_2d(j, m)),
    "noll": _noll_value,
    "trig": trig_power_expand,
    "rjcart": rj_trig_to_cart,
    "cart2z2d": cart_monomial_to_zernike_2d,
    "z2cart2d": _z2cart_value,
    "g": lambda n1, m1, n2, m2, m3: _rational_map(
        product_expand_2d(Index2D(n1, m1), Index2D(n2, m2), m3)
    ),
    "radial3d": lambda n, l: radial_3d(Index3D(n, l)),
    "f": power_to_radial_3d,
    "fhat": _fhat_value,
    "ylmcart": lambda l, m: ylm_cart(SphIndex(l, m)),
    "z3dcart": zernike3d_to_cart,
    "u": cart_monomial_to_zernike_3d,
    "yprod": lambda l1, m1, l2, m2: y_product_expand(SphIndex(l1, m1), SphIndex(l2, m2)),
    "k": lambda n1, l1, n2, l2, l3: product_expand_3d(Index3D(n1, l1), Index3D(n2, l2), l3),
}


def expected_value(family: str, key: Tuple[Any, ...]) -> Any:
    """Generate the library value for a fixture key."""
    return GENERATORS[family](*key)


def fixture_matches(entry: FixtureEntry) -> Tuple[bool, str]:
    """
    Compare one transcribed row with the generated value, exactly.

    Returns:
        Tuple (match, detail)
    """
    generated = expected_value(entry.family, entry.key)
    ok = generated == entry.value
    return ok, "" if ok else f"generated {generated!r}"


def check_fixtures(family: Optional[str], fixture_dir: Union[str, Path]) -> SuiteReport:
    """
    Compare every transcribed row of one family (or all) with the library.

    Args:
        family: Fixture family, or None / "all"
        fixture_dir: Directory of ``<family>.txt`` files

    Returns:
        SuiteReport with per-family counts in its notes
    """
    report = SuiteReport("fixtures")
    families = FIXTURE_FAMILIES if family in (None, "all") else (family,)
    for name in families:
        entries = load_fixtures(fixture_dir, name)
        seen: Dict[Tuple[Any, ...], int] = {}
        passed = 0
        for entry in entries:
            if entry.key in seen:
                report.results.append(
                    _exact(name, entry.key, False, f"duplicate of line {seen[entry.key]}")
                )
                continue
            seen[entry.key] = entry.source_line
            try:
                ok, detail = fixture_matches(entry)
            except ZernikeError as e:
                ok, detail = False, e.message
            passed += ok
            report.results.append(_exact(name, entry.key, ok, detail))
        report.notes.append(f"{name}: {passed}/{len(entries)} rows match")
    return finish(report)
