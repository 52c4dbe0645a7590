"""toeplitz-sharp — command-line entry point.

  series/   : truncated complex power series
  classes/  : generators φ, base curves g, families, extremal functions
  toeplitz/ : T_{m,n}(f) and its determinants
  bounds/   : BoundReport + the sharp closed-form bounds
  oracle/   : body scans and sharpness checks
  commands/ : one module per sub-command

This file only wires the pieces together.
"""

import argparse
import logging
import os
import sys
from collections.abc import Sequence

from commands import bounds, extremal, registry, verify
from commands.common import EXIT_INAPPLICABLE, EXIT_IO, EXIT_USAGE
from oracle import Inapplicable

LOG_LEVEL = os.getenv("TOEPLITZ_SHARP_LOG_LEVEL", "WARNING").upper()

logger = logging.getLogger(__name__)


class Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage failures map to exit code 64."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> Parser:
    parser = Parser(prog="toeplitz-sharp", description="Sharp Hermitian-Toeplitz determinant bounds.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at INFO")
    parser.add_argument("--debug", action="store_true", help="log at DEBUG")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    # ── Register sub-commands ─────────────────────────────────────────────────
    registry.register(sub)
    bounds.register(sub)
    verify.register(sub)
    extremal.register(sub)
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = LOG_LEVEL
    if args.verbose:
        level = "INFO"
    if args.debug:
        level = "DEBUG"
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level, logging.WARNING),
        format="[%(levelname)s] %(name)s | %(message)s",
        force=True,
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _configure_logging(args)

    try:
        return args.handler(args)
    except Inapplicable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
