"""Exact beta-expansions of rationals and Midy-property deciders."""

__version__ = "0.1.0"

from .algebra import (
    AlgebraicElement,
    BaseMismatchError,
    Interval,
    PrecisionExhaustedError,
    compare,
    enclose,
    floor_of,
    is_zero,
    reduce_power,
)
from .numeration import (
    BetaBase,
    CapExhaustedError,
    Expansion,
    InadmissibleDigitsError,
    NoDominantRootError,
    OrbitState,
    beta_integer_from_digits,
    digits_from_str,
    digits_to_str,
    expansion_is_admissible,
    greedy_expand,
    is_admissible,
    make_base,
    orbit_expansion,
    quasigreedy_one,
    t_step,
    verify_reconstruction,
)

__all__ = [
    "AlgebraicElement",
    "BaseMismatchError",
    "BetaBase",
    "CapExhaustedError",
    "Expansion",
    "InadmissibleDigitsError",
    "Interval",
    "NoDominantRootError",
    "OrbitState",
    "PrecisionExhaustedError",
    "beta_integer_from_digits",
    "compare",
    "digits_from_str",
    "digits_to_str",
    "enclose",
    "expansion_is_admissible",
    "floor_of",
    "greedy_expand",
    "is_admissible",
    "is_zero",
    "make_base",
    "orbit_expansion",
    "quasigreedy_one",
    "reduce_power",
    "t_step",
    "verify_reconstruction",
]
