"""Exact symbolic computation in the two-parameter quantum group U_{r,s}(G2)."""

from .scalars import ONE, R, RatFunc, S, ZERO
from .free import NcPoly, word_str
from .params import SOURCE, TARGET, Params
from .parser import parse_expr, parse_poly, print_expr
from .rewrite import is_zero, standard_rules, straighten
from .hopf import antipode, coproduct_n, counit
from .pairing import pair, tabular_report, zero_oracle
from .double import Double, DoubleElem, verify_double_presentation
from .lusztig import LusztigMap, lusztig_T, root_vectors, verify_T_preserves
from .checks import run_suite

__all__ = [
    "ONE", "R", "RatFunc", "S", "ZERO", "NcPoly", "word_str", "SOURCE", "TARGET", "Params",
    "parse_expr", "parse_poly", "print_expr", "is_zero", "standard_rules", "straighten",
    "antipode", "coproduct_n", "counit", "pair", "tabular_report", "zero_oracle", "Double",
    "DoubleElem", "verify_double_presentation", "LusztigMap", "lusztig_T", "root_vectors",
    "verify_T_preserves", "run_suite",
]
