"""classes/__init__.py"""

from .extremal import EXTREMAL_DESCRIPTIONS, EXTREMAL_KINDS, IncompatibleExtremal, extremal
from .families import (
    FamilyKind,
    FamilySpec,
    SamplePoint,
    a2a3_convex,
    a2a3_ctc,
    a2a3_starlike,
    body_a2a3,
    caratheodory_p2,
    caratheodory_series,
    check_starlike_identity,
    coeffs_close_to_convex,
    coeffs_convex,
    coeffs_starlike,
    rotate,
    schwarz_from_sample,
)
from .generators import (
    BadParams,
    ClassError,
    InvalidGenerator,
    MindaGenerator,
    UnknownClass,
    base_from_file,
    base_named,
    janowski_b1_b2,
    list_registry,
    phi_from_file,
    phi_named,
)

__all__ = [
    "ClassError",
    "UnknownClass",
    "BadParams",
    "InvalidGenerator",
    "IncompatibleExtremal",
    "MindaGenerator",
    "phi_named",
    "phi_from_file",
    "base_named",
    "base_from_file",
    "list_registry",
    "janowski_b1_b2",
    "FamilyKind",
    "FamilySpec",
    "SamplePoint",
    "caratheodory_p2",
    "a2a3_starlike",
    "a2a3_convex",
    "a2a3_ctc",
    "body_a2a3",
    "caratheodory_series",
    "schwarz_from_sample",
    "coeffs_starlike",
    "coeffs_convex",
    "coeffs_close_to_convex",
    "check_starlike_identity",
    "rotate",
    "extremal",
    "EXTREMAL_KINDS",
    "EXTREMAL_DESCRIPTIONS",
]
