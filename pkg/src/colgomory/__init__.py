"""Pure-integer Gomory cuts applied as primal columns, in exact arithmetic.

Solves ``max y'b  s.t.  y'A <= c', y integer`` by cutting on the dual side
and re-optimising ``min c'x, Ax = b, x >= 0`` with the primal simplex
method.
"""
from .cutgen import CutColumn, cut_as_inequality, derive_cut_column, minimal_r, validate_cut
from .driver import (INTEGER_INFEASIBLE, LIMIT_REACHED, OPTIMAL, LexifiedInstance, SolveReport,
                     check_boundedness, choose_source_index, lexify, solve_lex, solve_plain)
from .errors import *  # noqa: F401,F403
from .exact import LexValue, lex_compare, lex_scale_add
from .instance import DualFormInstance
from .oracle import IntegerBox, OracleResult, bounding_box, brute_force_optimum, feasible_points
from .serialize import emit_report, parse_instance, render_instance
from .simplex import (SimplexState, dual_solution, factor_basis, phase_one, pivot, primal_simplex,
                      ratio_test, reduced_cost)

__version__ = "0.1.0"
