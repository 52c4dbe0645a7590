"""bounds/__init__.py"""

from .sharp import (
    bounds_for_family,
    convex_G0,
    convex_G4,
    convex_quadratic,
    convex_sigma,
    ctc_condi,
    ctc_hypo,
    ctc_t31_value,
    primary_t31,
    starlike_discriminant,
    starlike_G0,
    starlike_G4,
    starlike_mu,
    starlike_quadratic,
    starlike_upper_value,
    t21_convex,
    t21_starlike,
    t31_lower_convex,
    t31_lower_starlike,
    t31_upper_convex,
    t31_upper_starlike,
    t_bounds_ctc,
)
from .spec import (
    CASE_LABELS,
    BadB1,
    BadCoefficient,
    Bound,
    BoundError,
    BoundReport,
    BoundSet,
    Precondition,
)

__all__ = [
    "Bound",
    "BoundReport",
    "BoundSet",
    "Precondition",
    "CASE_LABELS",
    "BoundError",
    "BadB1",
    "BadCoefficient",
    "t21_starlike",
    "t31_upper_starlike",
    "t31_lower_starlike",
    "t21_convex",
    "t31_upper_convex",
    "t31_lower_convex",
    "t_bounds_ctc",
    "bounds_for_family",
    "primary_t31",
    "starlike_quadratic",
    "convex_quadratic",
    "starlike_mu",
    "convex_sigma",
    "starlike_G0",
    "starlike_G4",
    "convex_G0",
    "convex_G4",
    "starlike_discriminant",
    "starlike_upper_value",
    "ctc_hypo",
    "ctc_condi",
    "ctc_t31_value",
]
