"""commands/bounds.py — `bounds`: closed-form sharp bounds for one family."""

import argparse
import logging

from bounds import bounds_for_family

from .common import EXIT_INAPPLICABLE, EXIT_OK, add_family_arguments, add_format_argument, emit, family_from_args

logger = logging.getLogger(__name__)

COLUMNS = ("quantity", "side", "value", "case", "mu_or_sigma", "applicable", "sharp", "extremal", "preconditions")


def run(args: argparse.Namespace) -> int:
    family = family_from_args(args)
    bounds = bounds_for_family(family)

    rows = []
    for r in bounds.reports:
        row = r.to_dict()
        row["preconditions"] = ";".join(f"{p.name}={'ok' if p.ok else 'FAIL'}" for p in r.preconditions)
        rows.append(row)
    emit(bounds.to_dict(), rows, COLUMNS, args.format)

    if not bounds.applicable():
        logger.info("%s: every bound is inapplicable", family.label)
        return EXIT_INAPPLICABLE
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("bounds", help="print the sharp bounds for a family")
    add_family_arguments(parser)
    add_format_argument(parser)
    parser.set_defaults(handler=run)
