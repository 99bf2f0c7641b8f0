"""Command-line schema: subcommands and their flags."""

import argparse
from typing import Any, Dict, List, Tuple

from ..constants import VERIFY_SUITES
from ..types import FIXTURE_FAMILIES
from .handlers.convert import DIRECTIONS

RANGE_FLAGS = ("nmax", "jmax", "lmax", "n1", "m1", "l1", "n2", "m2", "l2", "m3", "l3")


def _int_list(text: str) -> List[int]:
    """Parse ``1,2,3`` into [1, 2, 3]."""
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


# Flags shared by every subcommand: (flag, argparse keywords)
COMMON_FLAGS: List[Tuple[str, Dict[str, Any]]] = [
    ("--format", {"choices": ("text", "json"), "default": "text", "help": "Output format"}),
    ("--fixture-dir", {"default": None, "help": "Directory of <family>.txt fixture files"}),
    (
        "--threads",
        {"type": int, "default": None, "help": "Worker threads (overrides ZERNIKE_THREADS)"},
    ),
    ("--seed", {"type": int, "default": None, "help": "Seed for sampled oracles"}),
    ("--log-level", {"default": None, "help": "DEBUG, INFO, WARNING, ERROR or CRITICAL"}),
]

# Subcommands: name -> (help, [(flag, argparse keywords)])
COMMANDS: Dict[str, Tuple[str, List[Tuple[str, Dict[str, Any]]]]] = {
    "table": (
        "Print a coefficient table",
        [("family", {"choices": FIXTURE_FAMILIES, "help": "Table family"})]
        + [(f"--{name}", {"type": int, "default": None}) for name in RANGE_FLAGS],
    ),
    "verify": (
        "Run a verification suite",
        [
            ("suite", {"choices": VERIFY_SUITES, "help": "Suite name"}),
            (
                "--dim",
                {"type": int, "choices": (2, 3), "default": None, "help": "Restrict to 2D or 3D"},
            ),
            ("--family", {"default": None, "help": "Oracle or fixture family, or 'all'"}),
            ("--sphere", {"action": "store_true", "help": "Add sphere orthonormality to ortho"}),
        ]
        + [(f"--{name}", {"type": int, "default": None}) for name in ("nmax", "jmax", "lmax")],
    ),
    "convert": (
        "Convert between Cartesian monomials and Zernike functions",
        [
            ("direction", {"choices": DIRECTIONS}),
            ("--dim", {"type": int, "choices": (2, 3), "required": True}),
            ("--noll", {"type": int, "default": None, "help": "Noll index (zern2cart, dim 2)"}),
            (
                "--monomial",
                {"type": _int_list, "default": None, "help": "p,q or p,q,t (cart2zern)"},
            ),
            ("--index", {"type": _int_list, "default": None, "help": "n,l,m (zern2cart, dim 3)"}),
        ],
    ),
}


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser from COMMANDS and COMMON_FLAGS.

    Returns:
        Parser whose namespace carries ``command`` plus every flag as an attribute
    """
    parser = argparse.ArgumentParser(
        prog="zernike-exact",
        description="Exact coefficient tables and checks for 2D and 3D Zernike functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (help_text, flags) in COMMANDS.items():
        command = sub.add_parser(name, help=help_text)
        for flag, kwargs in flags + COMMON_FLAGS:
            command.add_argument(flag, **kwargs)
    return parser


def range_params(args: argparse.Namespace) -> Dict[str, Any]:
    """Collect the range flags present on a parsed namespace."""
    return {name: getattr(args, name) for name in RANGE_FLAGS if hasattr(args, name)}
