"""commands/registry.py — `classes list`."""

import argparse

from classes import list_registry

from .common import EXIT_OK, add_format_argument, emit

COLUMNS = ("kind", "name", "params", "B1", "B2", "b2", "b3", "description")


def run(args: argparse.Namespace) -> int:
    rows = list_registry(args.order)
    flat = [{**r, "params": ",".join(r.get("params", []) or r.get("aliases", []))} for r in rows]
    emit({"classes": rows}, flat, COLUMNS, args.format)
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("classes", help="list registry generators and base curves")
    actions = parser.add_subparsers(dest="action", required=True)
    ls = actions.add_parser("list", help="list every named φ and g")
    ls.add_argument("--order", type=int, default=6)
    add_format_argument(ls, default="table")
    ls.set_defaults(handler=run)
