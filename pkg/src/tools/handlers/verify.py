"""Verification command: run one suite and render its report."""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from ...config import Settings
from ...constants import (
    NOLL_ORTHO_NMAX,
    ORACLE_NMAX,
    ORTHO_NMAX_2D,
    ORTHO_NMAX_3D,
    RECURRENCE_JMAX_2D,
    RECURRENCE_JMAX_3D,
    ROUNDTRIP_JMAX_2D,
    ROUNDTRIP_JMAX_3D,
    ROUNDTRIP_NOLL_NMAX_2D,
    SPHERE_LMAX,
    SUMRULE_JMAX_2D,
    SUMRULE_JMAX_3D,
    SUMRULE_NMAX_PRODUCT_2D,
    SUMRULE_NMAX_PRODUCT_3D,
    SYMMETRY_JMAX,
    VERIFY_SUITES,
)
from ...types import FIXTURE_FAMILIES, SuiteReport
from ...utils.errors import UsageError
from .lib.checks import (
    ORACLE_FAMILIES,
    check_fixtures,
    check_oracle,
    check_ortho_2d,
    check_ortho_3d,
    check_recurrences_2d,
    check_recurrences_3d,
    check_roundtrip_2d,
    check_roundtrip_3d,
    check_sumrules_2d,
    check_sumrules_3d,
    check_symmetry,
)

logger = logging.getLogger(__name__)

Params = Dict[str, Optional[int]]


def _pick(params: Params, name: str, default: int) -> int:
    value = params.get(name)
    if value is None:
        return default
    if value < 0:
        raise UsageError(f"--{name} must be >= 0", {name: value})
    return value


def _dims(dim: Optional[int]) -> List[int]:
    if dim is None:
        return [2, 3]
    if dim not in (2, 3):
        raise UsageError("--dim must be 2 or 3", {"dim": dim})
    return [dim]


def _run_ortho(params: Params, dim: Optional[int], sphere: bool) -> List[SuiteReport]:
    reports = []
    for d in _dims(dim):
        if d == 2:
            reports.append(check_ortho_2d(_pick(params, "nmax", ORTHO_NMAX_2D), NOLL_ORTHO_NMAX))
        else:
            reports.append(
                check_ortho_3d(
                    _pick(params, "nmax", ORTHO_NMAX_3D), sphere, _pick(params, "lmax", SPHERE_LMAX)
                )
            )
    return reports


def _run_sumrules(params: Params, dim: Optional[int]) -> List[SuiteReport]:
    reports = []
    for d in _dims(dim):
        if d == 2:
            reports.append(
                check_sumrules_2d(
                    _pick(params, "jmax", SUMRULE_JMAX_2D),
                    _pick(params, "nmax", SUMRULE_NMAX_PRODUCT_2D),
                )
            )
        else:
            reports.append(
                check_sumrules_3d(
                    _pick(params, "jmax", SUMRULE_JMAX_3D),
                    _pick(params, "nmax", SUMRULE_NMAX_PRODUCT_3D),
                )
            )
    return reports


def _run_recurrences(params: Params, dim: Optional[int]) -> List[SuiteReport]:
    reports = []
    for d in _dims(dim):
        if d == 2:
            reports.append(check_recurrences_2d(_pick(params, "jmax", RECURRENCE_JMAX_2D)))
        else:
            reports.append(check_recurrences_3d(_pick(params, "jmax", RECURRENCE_JMAX_3D)))
    return reports


def _run_roundtrip(params: Params, dim: Optional[int]) -> List[SuiteReport]:
    reports = []
    for d in _dims(dim):
        if d == 2:
            reports.append(
                check_roundtrip_2d(
                    _pick(params, "jmax", ROUNDTRIP_JMAX_2D),
                    _pick(params, "nmax", ROUNDTRIP_NOLL_NMAX_2D),
                )
            )
        else:
            reports.append(check_roundtrip_3d(_pick(params, "jmax", ROUNDTRIP_JMAX_3D)))
    return reports


def _run_oracle(params: Params, family: Optional[str], settings: Settings) -> List[SuiteReport]:
    if family not in (None, "all") and family not in ORACLE_FAMILIES:
        raise UsageError(f"unknown oracle family {family!r}", {"known": list(ORACLE_FAMILIES)})
    # unset --nmax keeps the per-family defaults
    nmax = None if params.get("nmax") is None else _pick(params, "nmax", ORACLE_NMAX)
    return [check_oracle(family, nmax, settings.seed, settings.quadrature_order)]


def _run_fixtures(family: Optional[str], settings: Settings) -> List[SuiteReport]:
    if family not in (None, "all") and family not in FIXTURE_FAMILIES:
        raise UsageError(f"unknown fixture family {family!r}", {"known": list(FIXTURE_FAMILIES)})
    return [check_fixtures(family, settings.fixture_dir)]


def run_suite(
    suite: str,
    params: Params,
    settings: Settings,
    dim: Optional[int] = None,
    family: Optional[str] = None,
    sphere: bool = False,
) -> List[SuiteReport]:
    """
    Run one verification suite.

    Args:
        suite: One of VERIFY_SUITES
        params: Range parameters (None means the suite default)
        settings: Runtime settings (seed, fixture directory)
        dim: 2, 3 or None for both
        family: Oracle or fixture family, None / "all" for every family
        sphere: Add the sphere orthonormality check to ``ortho``

    Returns:
        One report per dimension or family group

    Raises:
        UsageError: Unknown suite, family or invalid range
    """
    runners: Dict[str, Callable[[], List[SuiteReport]]] = {
        "ortho": lambda: _run_ortho(params, dim, sphere),
        "sumrules": lambda: _run_sumrules(params, dim),
        "recurrences": lambda: _run_recurrences(params, dim),
        "roundtrip": lambda: _run_roundtrip(params, dim),
        "oracle": lambda: _run_oracle(params, family, settings),
        "fixtures": lambda: _run_fixtures(family, settings),
        "symmetry": lambda: [check_symmetry(_pick(params, "jmax", SYMMETRY_JMAX))],
    }
    if suite not in runners:
        raise UsageError(f"unknown suite {suite!r}", {"known": list(VERIFY_SUITES)})
    return runners[suite]()


def render_reports(reports: List[SuiteReport]) -> str:
    """One line per check, then notes and a summary line per suite."""
    lines = []
    for report in reports:
        lines.extend(result.render() for result in report.results)
        lines.extend(f"# {note}" for note in report.notes)
        failures = report.failures
        status = "PASS" if not failures else "FAIL"
        passed = len(report.results) - len(failures)
        lines.append(f"{status} {report.suite}: {passed}/{len(report.results)} checks")
        first = report.first_failure
        if first is not None:
            key = ",".join(str(k) for k in first.key)
            lines.append(f"first failure: {first.name} [{key}]")
    return "\n".join(lines) + "\n"


def cmd_verify(
    suite: str,
    params: Params,
    settings: Settings,
    dim: Optional[int] = None,
    family: Optional[str] = None,
    sphere: bool = False,
) -> Tuple[str, int]:
    """
    Run a suite and render the report.

    Returns:
        Tuple (report text, exit status): 0 when every check passes, 1 otherwise
    """
    reports = run_suite(suite, params, settings, dim=dim, family=family, sphere=sphere)
    passed = all(report.passed for report in reports)
    logger.info("verify %s: %s", suite, "pass" if passed else "fail")
    return render_reports(reports), 0 if passed else 1
