"""commands/extremal.py — `extremal`: coefficients and determinants of f1..f7."""

import argparse
import logging

from classes import EXTREMAL_DESCRIPTIONS, EXTREMAL_KINDS, extremal
from toeplitz import ToeplitzSpec, abs_det_T22, det_general, det_T21, det_T31

from .common import EXIT_OK, UsageError, add_family_arguments, add_format_argument, emit, family_from_args

logger = logging.getLogger(__name__)

COLUMNS = ("name", "value")

# T_{m,1} sizes printed beyond the bounded ones; no bound is claimed for them
_EXTRA_SIZES = (4, 5)


def _complex_dict(z: complex) -> dict[str, float]:
    return {"re": z.real, "im": z.imag}


def run(args: argparse.Namespace) -> int:
    eid = args.id.lower()
    kind = args.family or EXTREMAL_KINDS.get(eid)
    if kind is None:
        raise UsageError("`extremal identity` needs --family")

    family = family_from_args(args, kind)
    f = extremal(eid, family)

    coeffs = {f"a{n}": f[n] for n in range(2, min(5, f.order) + 1)}
    a2, a3 = f[2], f[3]
    dets: dict[str, float] = {
        "T21": float(det_T21(a2)),
        "T31": float(det_T31(a2, a3)),
        "ABS_T22": float(abs_det_T22(a2, a3)),
    }
    for m in _EXTRA_SIZES:
        if f.order >= m:
            dets[f"T{m}1"] = det_general(ToeplitzSpec.from_series(f, m)).real

    payload = {
        "family": family.label,
        "extremal": eid,
        "definition": EXTREMAL_DESCRIPTIONS[eid],
        "coefficients": {k: _complex_dict(v) for k, v in coeffs.items()},
        "determinants": dets,
    }
    rows = [{"name": k, "value": v} for k, v in coeffs.items()]
    rows += [{"name": f"det {k}", "value": v} for k, v in dets.items()]
    emit(payload, rows, COLUMNS, args.format)
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("extremal", help="evaluate an extremal function")
    parser.add_argument("id", choices=sorted(EXTREMAL_KINDS) + ["identity"], help="f1..f7 or identity")
    add_family_arguments(parser, family_required=False)
    add_format_argument(parser, default="table")
    parser.set_defaults(handler=run)
