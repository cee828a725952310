"""Exact coefficient arithmetic: Laurent polynomials, rational functions,
the nu-extension ring and truncated power series."""

from asmdpp.exactalg.mpoly import MPoly, const, var, variables
from asmdpp.exactalg.nuring import NU, NuElem, one_minus_nu_inverse
from asmdpp.exactalg.parse import parse, parse_poly
from asmdpp.exactalg.ratfun import RatFun, simplify, substitute, to_ratfun
from asmdpp.exactalg.series import GradedSeries, series_from_ratfun

__all__ = [
    "MPoly", "RatFun", "NuElem", "GradedSeries", "NU",
    "const", "var", "variables", "parse", "parse_poly",
    "simplify", "substitute", "to_ratfun", "series_from_ratfun", "one_minus_nu_inverse",
]
