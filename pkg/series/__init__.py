"""series/__init__.py"""

from .truncated import (
    DEFAULT_ORDER,
    BadConstantTerm,
    NonzeroInnerConstant,
    SeriesError,
    TruncatedSeries,
    ZeroConstantTerm,
    antiderivative,
    compose,
    derivative,
    div,
    divide_by_z,
    dump_series,
    exp_series,
    integrate_shifted,
    load_series,
    log_series,
    mul,
    power_series,
    sqrt_series,
    substitute_power,
    times_z,
)

__all__ = [
    "DEFAULT_ORDER",
    "TruncatedSeries",
    "SeriesError",
    "ZeroConstantTerm",
    "NonzeroInnerConstant",
    "BadConstantTerm",
    "mul",
    "div",
    "compose",
    "exp_series",
    "log_series",
    "sqrt_series",
    "power_series",
    "integrate_shifted",
    "antiderivative",
    "derivative",
    "times_z",
    "divide_by_z",
    "substitute_power",
    "load_series",
    "dump_series",
]
