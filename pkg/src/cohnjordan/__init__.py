"""Exact arithmetic and ideal checks for Cohn-Jordan extensions A(R; S)."""

from .contract import DegreeBoundExceeded, NoModelRegistered, Outcome, SRing, Verdict
from .extension import ExtElement, Extension
from .ideals import (FinGenLeftIdeal, SearchWindow, WindowedFamily, admissible_check,
                     ascending_chain_demo, closure_generators, closure_member,
                     delta_gamma_member, ext_ideal_member, gamma_family, gamma_member,
                     is_closed, principal_test, stability_check)
from .monoid import GroupElement, MonoidElement, compose, divide_exact, ore_pair
from .parsing import ParseError, parse_ideal
from .polys import QPoly, ZPoly
from .rings import QPolyRing, ZPolyRing, parse_ring

__version__ = "0.1.0"

__all__ = [
    "DegreeBoundExceeded", "ExtElement", "Extension", "FinGenLeftIdeal", "GroupElement",
    "MonoidElement", "NoModelRegistered", "Outcome", "ParseError", "QPoly", "QPolyRing",
    "SRing", "SearchWindow", "Verdict", "WindowedFamily", "ZPoly", "ZPolyRing",
    "admissible_check", "ascending_chain_demo", "closure_generators", "closure_member",
    "compose", "delta_gamma_member", "divide_exact", "ext_ideal_member", "gamma_family",
    "gamma_member", "is_closed", "ore_pair", "parse_ideal", "parse_ring", "principal_test",
    "stability_check",
]
