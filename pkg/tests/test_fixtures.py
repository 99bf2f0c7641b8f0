"""Tests for the fixture reader and the golden-table comparison."""

from fractions import Fraction

import pytest

from src.exact import RadialPoly, SurdSum
from src.tools.handlers.lib.checks import check_fixtures, fixture_matches
from src.types import FIXTURE_FAMILIES, AngularKind, Index2D, SphIndex
from src.utils.errors import FixtureFormatError
from src.utils.parser import load_fixtures, parse_fixture_line, parse_key, parse_value
from src.zernike3d import ylm_cart


def test_parse_key():
    assert parse_key("2,0,cos") == (2, 0, "cos")
    assert parse_key("1,-1,0,0") == (1, -1, 0, 0)
    assert parse_key("7") == (7,)


def test_parse_radial_values():
    root7 = SurdSum.sqrt(7)
    assert parse_value("radial3d", "1/2*7^(1/2)*( -3 +5*r^2)") == RadialPoly(
        {0: root7 * Fraction(-3, 2), 2: root7 * Fraction(5, 2)}
    )
    assert parse_value("radial2d", "-1 +2*r^2") == RadialPoly({0: -1, 2: 2})


def test_parse_expansions():
    assert parse_value("trig", "[ 1 +cos(2*phi) ]/2") == {
        AngularKind.radial(): Fraction(1, 2),
        AngularKind.cos(2): Fraction(1, 2),
    }
    assert parse_value("h", "1/2*R_0^0(r) +1/2*R_2^0(r)") == {0: Fraction(1, 2), 2: Fraction(1, 2)}
    assert parse_value("fhat", "5/21*R_2^(2) -2/21*R_2^(0)") == {
        2: Fraction(5, 21),
        0: Fraction(-2, 21),
    }
    assert parse_value("yprod", "1/3*2^(1/2)*Y_1^(-1)") == {
        SphIndex(1, -1): SurdSum.sqrt(2, Fraction(1, 3))
    }


def test_parse_noll_row():
    norm, idx, kind = parse_value("noll", "2*R_1^1(r)*sin(phi)")
    assert norm == 2
    assert idx == Index2D(1, 1)
    assert kind == AngularKind.sin(1)


def test_parse_complex_rows():
    assert parse_value("ylmcart", "-1/4*6^(1/2)*x , -1/4*6^(1/2)*y") == ylm_cart(SphIndex(1, 1))
    u = parse_value("u", "1/15*i*30^(1/2)*Z_1,1^(-1) +1/15*i*30^(1/2)*Z_1,1^(1)")
    assert set(u.keys()) == {(1, 1, -1), (1, 1, 1)}
    assert u[(1, 1, 1)].im == SurdSum.sqrt(30, Fraction(1, 15))


@pytest.mark.parametrize(
    "line, message",
    [
        ("h | 2,0", "expected 'family | key | value'"),
        ("bogus | 1 | 1", "unknown fixture family"),
        ("h | 2,0 | R_0^0(r)^2", "basis symbol raised to a power"),
        ("noll | 5 | R_2^2(r)*cos(2*phi) +R_0^0(r)", "Noll row must hold one term"),
        ("cart2z2d | 1,0 | R_1^1(r)*cos(2*phi)", "trig order does not match"),
        ("ylmcart | 1,0 | z", "expected 're , im'"),
    ],
)
def test_bad_lines_report_file_and_line(line, message):
    with pytest.raises(FixtureFormatError) as info:
        parse_fixture_line(line, "broken.txt", 12)
    assert message in info.value.message
    assert info.value.file == "broken.txt"
    assert info.value.line == 12
    assert info.value.to_dict()["context"]["line"] == 12


def test_blank_and_comment_lines_are_skipped():
    assert parse_fixture_line("   ") is None
    assert parse_fixture_line("# radial polynomials") is None


def test_load_fixtures_missing_file(tmp_path):
    with pytest.raises(FixtureFormatError):
        load_fixtures(tmp_path, "h")
    with pytest.raises(FixtureFormatError):
        load_fixtures(tmp_path, "nope")


def test_load_fixtures_rejects_foreign_rows(tmp_path):
    (tmp_path / "h.txt").write_text("g | 1,1,1,1,2 | R_2^2(r)\n", encoding="utf-8")
    with pytest.raises(FixtureFormatError) as info:
        load_fixtures(tmp_path, "h")
    assert info.value.line == 1


def test_fixture_matches_reports_generated_value(fixture_dir):
    good = parse_fixture_line("h | 2,0 | 1/2*R_0^0(r) +1/2*R_2^0(r)")
    assert fixture_matches(good) == (True, "")
    bad = parse_fixture_line("h | 2,0 | 1/3*R_0^0(r) +2/3*R_2^0(r)")
    ok, detail = fixture_matches(bad)
    assert not ok
    assert detail.startswith("generated")


def test_fixture_matches_compares_y_products_exactly():
    printed = parse_fixture_line("yprod | 1,0,1,0 | 2/3*2^(1/2)*Y_0^(0) +4/15*6^(1/2)*Y_2^(0)")
    assert fixture_matches(printed) == (True, "")
    # same terms and signs, Gaunt magnitudes
    gaunt = parse_fixture_line("yprod | 1,0,1,0 | 1/2*Y_0^(0) +1/5*5^(1/2)*Y_2^(0)")
    ok, _ = fixture_matches(gaunt)
    assert not ok


def test_check_fixtures_flags_duplicates_and_mismatches(tmp_path):
    (tmp_path / "h.txt").write_text(
        "h | 0,0 | R_0^0(r)\n"
        "h | 0,0 | R_0^0(r)\n"
        "h | 1,1 | 2*R_1^1(r)\n",
        encoding="utf-8",
    )
    report = check_fixtures("h", tmp_path)
    assert not report.passed
    assert [r.passed for r in report.results] == [True, False, False]
    assert "duplicate of line 1" in report.results[1].detail
    assert report.notes == ["h: 1/3 rows match"]


@pytest.mark.parametrize("family", FIXTURE_FAMILIES)
def test_shipped_fixtures_match(fixture_dir, family):
    report = check_fixtures(family, fixture_dir)
    assert report.results
    assert report.passed, report.first_failure.render()
