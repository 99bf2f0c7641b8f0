"""End-to-end tests of the zernike-exact command line."""

import json

import pytest

from src.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main
from src.config import load_settings
from src.constants import THREADS_ENV_VAR
from src.utils.errors import UsageError


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)


def _run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


# ============= TABLE =============


def test_table_radial2d(capsys):
    status, out, _ = _run(capsys, "table", "radial2d", "--nmax", "4")
    assert status == EXIT_OK
    assert "R_4^2(r) = -3*r^2 +4*r^4" in out.splitlines()
    assert out.splitlines()[0] == "R_0^0(r) = 1"
    assert len(out.splitlines()) == 9


def test_table_smallest_range(capsys):
    status, out, _ = _run(capsys, "table", "radial2d", "--nmax", "0")
    assert status == EXIT_OK
    assert out == "R_0^0(r) = 1\n"


def test_table_k_single_row(capsys):
    status, out, _ = _run(
        capsys, "table", "k", "--n1", "2", "--l1", "2", "--n2", "3", "--l2", "3", "--l3", "5"
    )
    assert status == EXIT_OK
    assert out == "R_2^(2)(r)*R_3^(3)(r) = 3/13*91^(1/2)*R_5^(5)(r)\n"


def test_table_json(capsys):
    argv = ["table", "k", "--n1", "2", "--l1", "2", "--n2", "3", "--l2", "3", "--l3", "5"]
    status, out, _ = _run(capsys, *argv, "--format", "json")
    assert status == EXIT_OK
    records = json.loads(out)
    assert records == [
        {
            "family": "k",
            "key": [2, 2, 3, 3, 5, 5],
            "terms": [{"num": 3, "den": 13, "radicand": 91, "imag": False}],
        }
    ]


def test_table_output_independent_of_threads(capsys):
    _, single, _ = _run(capsys, "table", "g", "--nmax", "4", "--threads", "1")
    _, pooled, _ = _run(capsys, "table", "g", "--nmax", "4", "--threads", "4")
    assert single == pooled
    assert single


def test_table_negative_range_is_usage_error(capsys):
    status, out, err = _run(capsys, "table", "h", "--jmax", "-1")
    assert status == EXIT_USAGE
    assert out == ""
    error = json.loads(err.strip().splitlines()[-1])
    assert error["errorType"] == "usage"
    assert error["context"]["jmax"] == -1


@pytest.mark.parametrize(
    "argv, offending",
    [
        (["table", "k", "--nmax", "3", "--n1", "5"], {"n1": 5, "nmax": 3}),
        (["table", "g", "--n1", "9"], {"n1": 9, "nmax": 8}),
        (["table", "k", "--n1", "3", "--l1", "0"], {"n1": 3, "l1": 0}),
        (["table", "k", "--n2", "2", "--l2", "3"], {"n2": 2, "l2": 3}),
        (["table", "g", "--n1", "2", "--m1", "1"], {"n1": 2, "m1": 1}),
        (["table", "g", "--n2", "4", "--m2", "-2"], {"n2": 4, "m2": -2}),
    ],
)
def test_table_impossible_product_filter_is_rejected(capsys, argv, offending):
    status, out, err = _run(capsys, *argv)
    assert status == EXIT_USAGE
    assert out == ""
    error = json.loads(err.strip().splitlines()[-1])
    assert error["errorType"] == "invalid-argument"
    assert offending.items() <= error["context"].items()


def test_unknown_family_is_rejected_by_the_parser(capsys):
    with pytest.raises(SystemExit) as info:
        main(["table", "bogus"])
    assert info.value.code == EXIT_USAGE


# ============= VERIFY =============


def test_verify_sumrules(capsys):
    status, out, _ = _run(capsys, "verify", "sumrules", "--dim", "2", "--jmax", "14", "--nmax", "4")
    assert status == EXIT_OK
    assert "PASS sumrules-2d" in out


def test_verify_fixtures(capsys, fixture_dir):
    status, out, _ = _run(
        capsys, "verify", "fixtures", "--family", "g", "--fixture-dir", str(fixture_dir)
    )
    assert status == EXIT_OK
    notes = [line for line in out.splitlines() if line.startswith("# g: ")]
    assert notes and notes[0].endswith("rows match")


def test_verify_oracle(capsys):
    status, out, _ = _run(capsys, "verify", "oracle", "--family", "k", "--nmax", "4", "--seed", "3")
    assert status == EXIT_OK
    assert "# seed=3" in out


def test_verify_failure_exit_status(capsys, tmp_path):
    (tmp_path / "h.txt").write_text("h | 1,1 | 2*R_1^1(r)\n", encoding="utf-8")
    status, out, _ = _run(
        capsys, "verify", "fixtures", "--family", "h", "--fixture-dir", str(tmp_path)
    )
    assert status == EXIT_CHECK_FAILED
    assert out.splitlines()[-1] == "first failure: h [1,1]"


def test_verify_unknown_family(capsys):
    status, _, err = _run(capsys, "verify", "oracle", "--family", "bogus")
    assert status == EXIT_USAGE
    assert "unknown oracle family" in err


# ============= CONVERT =============


def test_convert_cart2zern_2d(capsys):
    status, out, _ = _run(capsys, "convert", "cart2zern", "--dim", "2", "--monomial", "2,2")
    assert status == EXIT_OK
    assert out.startswith("x^2*y^2 = ")
    assert "-1/8*R_4^4(r)*cos(4*phi)" in out
    assert "1/24*R_0^0(r)" in out


def test_convert_zern2cart_2d(capsys):
    status, out, _ = _run(capsys, "convert", "zern2cart", "--dim", "2", "--noll", "4")
    assert status == EXIT_OK
    assert out.startswith("Z_4 = ")
    assert "2*3^(1/2)*x^2" in out


def test_convert_zern2cart_3d(capsys):
    status, out, _ = _run(capsys, "convert", "zern2cart", "--dim", "3", "--index", "1,1,1")
    assert status == EXIT_OK
    assert out == "Pi^(1/2) Z_1,1^(1) = -1/4*30^(1/2)*x , -1/4*30^(1/2)*y\n"


def test_convert_cart2zern_3d_json(capsys):
    status, out, _ = _run(
        capsys, "convert", "cart2zern", "--dim", "3", "--monomial", "0,0,1", "--format", "json"
    )
    assert status == EXIT_OK
    assert json.loads(out) == [
        {
            "family": "u",
            "key": [0, 0, 1, 1, 1, 0],
            "terms": [{"num": 2, "den": 15, "radicand": 15, "imag": False}],
        }
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ["convert", "zern2cart", "--dim", "3", "--index", "2,1,0"],
        ["convert", "cart2zern", "--dim", "3", "--monomial", "1,0"],
        ["convert", "cart2zern", "--dim", "2", "--monomial=-1,2"],
        ["convert", "zern2cart", "--dim", "2"],
        ["convert", "zern2cart", "--dim", "2", "--noll", "0"],
    ],
)
def test_convert_usage_errors(capsys, argv):
    status, out, err = _run(capsys, *argv)
    assert status == EXIT_USAGE
    assert out == ""
    assert json.loads(err.strip().splitlines()[-1])["errorType"] == "usage"


# ============= SETTINGS =============


def test_threads_from_environment():
    assert load_settings(env={THREADS_ENV_VAR: "3"}).threads == 3
    assert load_settings(env={THREADS_ENV_VAR: "3"}, threads=2).threads == 2


def test_invalid_settings():
    with pytest.raises(UsageError):
        load_settings(env={THREADS_ENV_VAR: "0"})
    with pytest.raises(UsageError):
        load_settings(env={}, log_level="LOUD")


def test_invalid_threads_flag(capsys):
    status, _, err = _run(capsys, "table", "h", "--jmax", "2", "--threads", "0")
    assert status == EXIT_USAGE
    assert "invalid settings" in err
