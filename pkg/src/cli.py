#!/usr/bin/env python3
"""zernike-exact command-line entry point."""

import json
import logging
import sys
from typing import List, Optional

from .config import Settings, load_settings
from .tools.handlers.convert import cmd_convert
from .tools.handlers.table import cmd_table
from .tools.handlers.verify import cmd_verify
from .tools.schemas import build_parser, range_params
from .utils.errors import ZernikeError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def configure_logging(level: str) -> None:
    """Send log records to stderr so stdout carries only command output."""
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def handle_command(args, settings: Settings) -> int:
    """
    Dispatch a parsed command and write its output.

    Args:
        args: Parsed namespace
        settings: Runtime settings

    Returns:
        Exit status
    """
    if args.command == "table":
        sys.stdout.write(cmd_table(args.family, range_params(args), args.format, settings))
        return EXIT_OK
    elif args.command == "verify":
        text, status = cmd_verify(
            args.suite,
            range_params(args),
            settings,
            dim=args.dim,
            family=args.family,
            sphere=args.sphere,
        )
        sys.stdout.write(text)
        return status
    elif args.command == "convert":
        sys.stdout.write(
            cmd_convert(
                args.direction,
                args.dim,
                args.format,
                noll=args.noll,
                monomial=args.monomial,
                index=args.index,
            )
        )
        return EXIT_OK
    raise ZernikeError(f"unknown command {args.command!r}")  # pragma: no cover


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, configure logging and run one command."""
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings(
            threads=args.threads,
            seed=args.seed,
            fixture_dir=args.fixture_dir,
            log_level=args.log_level,
        )
        configure_logging(settings.log_level)
        return handle_command(args, settings)
    except ZernikeError as e:
        logger.error("%r", e)
        sys.stderr.write(json.dumps(e.to_dict(), sort_keys=True, default=str) + "\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
