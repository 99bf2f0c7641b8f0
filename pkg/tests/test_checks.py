"""Tests for the verification suites and their report rendering."""

import pytest

from src.constants import ORTHO_NMAX_2D
from src.tools.handlers.lib.checks import (
    ORACLE_FAMILIES,
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
from src.tools.handlers.verify import cmd_verify, render_reports, run_suite
from src.types import CheckResult, SuiteReport
from src.utils.errors import UsageError
from src.zernike2d.noll import noll_count


def _names(report):
    return {r.name for r in report.results}


def test_ortho_2d_passes():
    report = check_ortho_2d(6, noll_nmax=3)
    assert report.passed
    assert _names(report) == {
        "radial-forms",
        "radial-at-one",
        "radial-ortho",
        "radial-ortho-quad",
        "noll-ortho",
    }


@pytest.mark.slow
def test_ortho_2d_full_range_passes():
    report = check_ortho_2d(ORTHO_NMAX_2D, noll_nmax=1)
    assert report.passed, report.first_failure.render()
    keys = {(r.name, r.key) for r in report.results}
    assert ("radial-ortho", (14, 16, 0)) in keys
    assert ("radial-ortho-quad", (16, 16, 16)) in keys


def test_ortho_3d_with_sphere_passes():
    report = check_ortho_3d(6, sphere=True, lmax=3)
    assert report.passed
    assert "sphere-orthonormality" in _names(report)


def test_sumrules_pass():
    assert check_sumrules_2d(10, 4).passed
    report = check_sumrules_3d(8, 3)
    assert report.passed
    assert {"f-sum", "fhat-sum", "k-sum", "k-routes"} <= _names(report)


def test_recurrences_pass():
    assert check_recurrences_2d(10).passed
    report = check_recurrences_3d(8, phi_max=2)
    assert report.passed
    assert "phi-recur" in _names(report)


def test_roundtrips_pass():
    assert check_roundtrip_2d(4, 3).passed
    report = check_roundtrip_3d(2, project_jmax=2, lmax=3)
    assert report.passed
    assert {"cart-zern-cart", "u-projection", "negative-m"} <= _names(report)


@pytest.mark.parametrize("family", ORACLE_FAMILIES)
def test_oracle_families_pass(family):
    report = check_oracle(family, 3, seed=11)
    assert report.results
    assert report.passed, report.first_failure.render()
    assert report.notes == ["seed=11"]


@pytest.mark.parametrize("family, top", [("cross2d", 9), ("cross3d", 7)])
def test_cross_eval_defaults_reach_full_range(family, top):
    report = check_oracle(family, None, seed=5)
    assert report.passed, report.first_failure.render()
    if family == "cross2d":
        assert max(r.key[0] for r in report.results) == noll_count(top)
    else:
        assert max(r.key[0] for r in report.results) == top


@pytest.mark.slow
def test_u_oracle_default_reaches_degree_five():
    report = check_oracle("u", None, seed=5)
    assert report.passed, report.first_failure.render()
    assert max(sum(r.key[:3]) for r in report.results) == 5


def test_symmetry_passes():
    report = check_symmetry(2)
    assert report.passed
    assert [r.name for r in report.results] == ["3j-symmetries", "yprod-gaunt"]


def test_render_reports_summarises_failures():
    report = SuiteReport(
        "demo",
        results=[
            CheckResult("h-sum", (2, 0), True),
            CheckResult("h-oracle", (2, 0, 0), False, residual=1e-3),
        ],
        notes=["h: 1/2 rows match"],
    )
    text = render_reports([report])
    lines = text.splitlines()
    assert lines[0] == "PASS h-sum [2,0] exact"
    assert lines[1] == "FAIL h-oracle [2,0,0] residual=1.000e-03"
    assert "# h: 1/2 rows match" in lines
    assert "FAIL demo: 1/2 checks" in lines
    assert lines[-1] == "first failure: h-oracle [2,0,0]"


def test_run_suite_rejects_bad_requests(settings):
    with pytest.raises(UsageError):
        run_suite("nope", {}, settings)
    with pytest.raises(UsageError):
        run_suite("sumrules", {"jmax": -1}, settings, dim=2)
    with pytest.raises(UsageError):
        run_suite("oracle", {}, settings, family="nope")
    with pytest.raises(UsageError):
        run_suite("fixtures", {}, settings, family="nope")
    with pytest.raises(UsageError):
        run_suite("ortho", {}, settings, dim=4)


def test_cmd_verify_status(settings):
    text, status = cmd_verify("symmetry", {"jmax": 1}, settings)
    assert status == 0
    assert "PASS symmetry: 2/2 checks" in text
    text, status = cmd_verify("recurrences", {"jmax": 6}, settings, dim=3)
    assert status == 0
    assert text.rstrip().endswith("checks")
