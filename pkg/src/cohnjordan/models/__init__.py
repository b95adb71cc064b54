"""Explicit models of Cohn-Jordan extensions, used as independent oracles."""

from .halfint import HalfIntPoly, halfint_contract, halfint_membership, halfint_quotient
from .puiseux import (DyadicPuiseux, puiseux_contract, puiseux_divides, puiseux_gcd,
                      puiseux_gcd_many, puiseux_level, puiseux_quotient, puiseux_xgcd)
from .registry import (HalfIntModel, Model, PuiseuxModel, SkewModel, has_model,
                       iso_from_model, iso_to_model, model_for)
from .skew import (DyadicRatFunc, SkewPoly, SkewRing, skew_in_R, skew_mul,
                   skew_right_divmod, skew_right_gcd)

__all__ = [
    "DyadicPuiseux", "DyadicRatFunc", "HalfIntModel", "HalfIntPoly", "Model",
    "PuiseuxModel", "SkewModel", "SkewPoly", "SkewRing", "halfint_contract",
    "halfint_membership", "halfint_quotient", "has_model", "iso_from_model",
    "iso_to_model", "model_for", "puiseux_contract", "puiseux_divides",
    "puiseux_gcd", "puiseux_gcd_many", "puiseux_level", "puiseux_quotient",
    "puiseux_xgcd", "skew_in_R", "skew_mul", "skew_right_divmod", "skew_right_gcd",
]
