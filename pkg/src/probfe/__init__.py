"""Exact probabilistic Stirling numbers and Frobenius-Euler polynomial bases.

Everything is computed over ``fractions.Fraction``; no floating point is
used anywhere.
"""
from .closedforms import closed_falling, closed_monomial, model_closed_s1
from .exact import rat, rat_parse, rat_str
from .families import FamilySpec, PolynomialFamily, build_family, frobenius_euler
from .polyparse import PolySyntaxError, parse_poly
from .represent import BasisExpansion, expand, expand_thm4, expand_thm31, expand_thm33, reconstruct
from .rvmodels import (
    UNIT,
    MomentModel,
    bernoulli,
    custom,
    exponential,
    geometric,
    load_custom_moments,
    make_model,
    poisson,
)
from .series import TruncatedSeries, XPolynomial
from .stirling import (
    StirlingTable,
    classical_s1,
    classical_s2,
    degenerate_s1,
    degenerate_s2,
    probabilistic_degenerate_s1,
    probabilistic_degenerate_s2,
    probabilistic_s1,
    probabilistic_s2,
    probabilistic_s2_direct,
    table_invert,
)

__version__ = "0.1.0"

__all__ = [
    "BasisExpansion", "FamilySpec", "MomentModel", "PolySyntaxError", "PolynomialFamily",
    "StirlingTable", "TruncatedSeries", "UNIT", "XPolynomial", "bernoulli", "build_family",
    "classical_s1", "classical_s2", "closed_falling", "closed_monomial", "custom",
    "degenerate_s1", "degenerate_s2", "expand", "expand_thm31", "expand_thm33", "expand_thm4",
    "exponential", "frobenius_euler", "geometric", "load_custom_moments", "make_model",
    "model_closed_s1", "parse_poly", "poisson", "probabilistic_degenerate_s1",
    "probabilistic_degenerate_s2", "probabilistic_s1", "probabilistic_s2",
    "probabilistic_s2_direct", "rat", "rat_parse", "rat_str", "reconstruct", "table_invert",
]
