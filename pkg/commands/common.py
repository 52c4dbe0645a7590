"""commands/common.py — shared CLI plumbing: family selection, rendering, exit codes."""

import argparse
import csv
import json
import logging
import sys
from collections.abc import Sequence
from typing import Any, TextIO

from classes import BadParams, FamilySpec, base_from_file, base_named, phi_from_file, phi_named
from series import DEFAULT_ORDER

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INAPPLICABLE = 2
EXIT_USAGE = 64
EXIT_IO = 74

FAMILIES = ("starlike", "convex", "ctc")
FORMATS = ("json", "table", "csv")


class UsageError(ValueError):
    pass


def add_family_arguments(parser: argparse.ArgumentParser, *, family_required: bool = True) -> None:
    parser.add_argument(
        "--family",
        choices=FAMILIES,
        required=family_required,
        help="S*(φ), C(φ) or K(g)",
    )
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--phi", metavar="NAME[:PARAMS]", help="registry generator, e.g. janowski:A=1,B=-1")
    source.add_argument("--phi-file", metavar="PATH", help="generator series as JSON [re, im] pairs")
    source.add_argument("--g", metavar="NAME", help="registry base curve, e.g. koebe or f1-base")
    source.add_argument("--g-file", metavar="PATH", help="base curve series as JSON [re, im] pairs")
    parser.add_argument("--order", type=int, default=DEFAULT_ORDER, help=f"truncation order (default {DEFAULT_ORDER})")


def add_format_argument(parser: argparse.ArgumentParser, default: str = "json") -> None:
    parser.add_argument("--format", choices=FORMATS, default=default, help=f"output format (default {default})")


def parse_selector(text: str) -> tuple[str, dict[str, float] | list[float]]:
    """`name`, `name:1,-1` or `name:A=1,B=-1`."""
    name, _, rest = text.partition(":")
    name = name.strip()
    if not name:
        raise UsageError(f"empty generator name in {text!r}")
    if not rest.strip():
        return name, {}

    named: dict[str, float] = {}
    positional: list[float] = []
    for part in rest.split(","):
        part = part.strip()
        if not part:
            continue
        key, eq, value = part.partition("=")
        try:
            if eq:
                named[key.strip()] = float(value)
            else:
                positional.append(float(key))
        except ValueError as exc:
            raise BadParams(f"{name}: cannot read parameter {part!r}") from exc
    if named and positional:
        raise UsageError(f"{text!r}: mix of named and positional parameters")
    return name, named or positional


def family_from_args(args: argparse.Namespace, kind: str | None = None) -> FamilySpec:
    kind = kind or args.family
    if kind in ("starlike", "convex"):
        if args.phi:
            name, params = parse_selector(args.phi)
            gen = phi_named(name, params, args.order)
        elif args.phi_file:
            gen = phi_from_file(args.phi_file, args.order)
        else:
            raise UsageError(f"--family {kind} needs --phi or --phi-file")
        return FamilySpec.starlike(gen) if kind == "starlike" else FamilySpec.convex(gen)

    if args.g:
        name, base = base_named(args.g, args.order)
    elif args.g_file:
        name, base = base_from_file(args.g_file, args.order)
    else:
        raise UsageError("--family ctc needs --g or --g-file")
    return FamilySpec.close_to_convex(base, name)


# ── rendering ─────────────────────────────────────────────────────────────────


def dump_json(obj: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, no timestamps."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, complex):
        return f"{value.real:.12g}{value.imag:+.12g}i"
    if value is None:
        return "-"
    return str(value)


def render_table(rows: Sequence[dict[str, Any]], columns: Sequence[str], out: TextIO | None = None) -> None:
    out = out or sys.stdout
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for r in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def render_csv(rows: Sequence[dict[str, Any]], columns: Sequence[str], out: TextIO | None = None) -> None:
    writer = csv.writer(out or sys.stdout, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])


def emit(payload: dict[str, Any], rows: Sequence[dict[str, Any]], columns: Sequence[str], fmt: str) -> None:
    """JSON prints the full payload; table/csv print the flat rows."""
    if fmt == "json":
        sys.stdout.write(dump_json(payload) + "\n")
    elif fmt == "csv":
        render_csv(rows, columns)
    else:
        render_table(rows, columns)
