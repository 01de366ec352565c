"""Exact fraction-free elimination on the counting board."""

from .detkit import cramer_solve, det_oracle, det_via_chio, leading_principal_minor
from .diagonalize import (Solution, back_substitute, gauss_jordan, hart_backward,
                          op_count_compare, solve)
from .eliminate import PivotPolicy, PivotStrategy, forward_eliminate, forward_step, pivot_select
from .ring import POLY, QQ, ZERO_DEGREE, ZZ, MultiPoly, OpTally, degree, exact_div, gcd
from .tableau import Tableau, from_system, generic_tableau, max_bit_length, parse_tableau, render
from .trace import BoardSnapshot, Trace
from .wellprob import WellSystem, build_well_system, closed_form_det, posited_b, solve_well

__version__ = "0.1.0"

__all__ = [
    "BoardSnapshot", "MultiPoly", "OpTally", "PivotPolicy", "PivotStrategy", "POLY", "QQ",
    "Solution", "Tableau", "Trace", "WellSystem", "ZERO_DEGREE", "ZZ",
    "back_substitute", "build_well_system", "closed_form_det", "cramer_solve", "degree",
    "det_oracle", "det_via_chio", "exact_div", "forward_eliminate", "forward_step",
    "from_system", "gauss_jordan", "gcd", "generic_tableau", "hart_backward",
    "leading_principal_minor", "max_bit_length", "op_count_compare", "parse_tableau",
    "pivot_select", "posited_b", "render", "solve", "solve_well",
]
