"""Revised primal simplex over exact rationals.

The state keeps an explicit basis inverse ``inv = A_beta^{-1}``.  Two
right-hand-side modes are supported:

``plain``
    RHS is the integer vector ``b`` of the instance; basic values are
    ``inv @ b``.
``lex``
    RHS is ``(eps**0, ..., eps**(m-1))``, i.e. the identity matrix read as a
    vector of :class:`LexValue`; basic value ``k`` is row ``k`` of ``inv``.
    Every basis is non-degenerate, so every pivot strictly lex-decreases the
    dual solution.

Columns, basis positions and rows are 0-based here; the user-facing layers
add one when printing.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import (ContractViolation, InvariantViolation, PivotError,
                     PrimalInfeasible, SingularBasis)
from .exact import LexValue, SingularMatrix, mat_inverse, mat_vec, vec_mat
from .instance import DualFormInstance

PLAIN = "plain"
LEX = "lex"
DANTZIG = "dantzig"
BLAND = "bland"

REFACTOR_EVERY = 50


class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    LIMIT = "limit"


@dataclass
class LPResult:
    status: LPStatus
    pivots: int
    unbounded_column: int | None = None


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvariantViolation(msg)


class SimplexState:
    """Basis, exact inverse and cached primal/dual solutions.

    Build one with :func:`factor_basis` or :func:`phase_one`.  ``check``
    turns on the per-pivot assertions (``inv @ A_beta == I`` and the lex
    feasibility/non-degeneracy checks).
    """

    def __init__(self, instance: DualFormInstance, basis: Sequence[int], inv, mode: str,
                 rhs: Sequence[int] | None, check: bool = True,
                 refactor_every: int = REFACTOR_EVERY):
        self.instance = instance
        self.basis = list(basis)
        self.inv = inv
        self.mode = mode
        self.rhs = None if rhs is None else tuple(rhs)
        self.check = check
        self.refactor_every = refactor_every
        self.pivot_count = 0
        self.phase_one_pivots = 0
        self._since_refactor = 0
        self.refresh()

    @property
    def m(self) -> int:
        return self.instance.m

    def refresh(self) -> None:
        cb = [self.instance.c[j] for j in self.basis]
        self.y = vec_mat(cb, self.inv)
        if self.mode == LEX:
            self.xb = [LexValue(row) for row in self.inv]
        else:
            self.xb = mat_vec(self.inv, self.rhs)

    def basis_matrix(self) -> list[list[int]]:
        cols = [self.instance.columns[j] for j in self.basis]
        return [list(r) for r in zip(*cols)]

    def objective(self):
        """``c_beta' xb``: a Fraction in plain mode, a LexValue in lex mode."""
        if self.mode == LEX:
            return LexValue(self.y)
        return sum((Fraction(self.instance.c[j]) * x for j, x in zip(self.basis, self.xb)),
                   Fraction(0))

    def dual_objective(self) -> Fraction:
        return sum((yk * bk for yk, bk in zip(self.y, self.instance.b)), Fraction(0))

    def is_feasible(self) -> bool:
        if self.mode == LEX:
            return all(x.is_positive() for x in self.xb)
        return all(x >= 0 for x in self.xb)

    def direction(self, j: int) -> list[Fraction]:
        return mat_vec(self.inv, self.instance.columns[j])

    def copy(self) -> SimplexState:
        new = SimplexState.__new__(SimplexState)
        new.__dict__.update(self.__dict__)
        new.basis = list(self.basis)
        new.inv = [list(r) for r in self.inv]
        new.y = list(self.y)
        new.xb = list(self.xb)
        return new

    def check_inverse(self) -> None:
        B = self.basis_matrix()
        m = self.m
        for i, row in enumerate(self.inv):
            for k in range(m):
                v = sum((row[t] * B[t][k] for t in range(m)), Fraction(0))
                _require(v == (1 if i == k else 0), "inv @ A_beta != I at (%d, %d)" % (i, k))

    def __repr__(self) -> str:
        return "SimplexState(mode=%s, basis=%s)" % (self.mode, [j + 1 for j in self.basis])


def factor_basis(instance: DualFormInstance, basis: Sequence[int], mode: str = PLAIN,
                 rhs: Sequence[int] | None = None, check: bool = True) -> SimplexState:
    """Factor ``A_beta`` from scratch and return the resulting state.

    ``rhs`` defaults to ``instance.b`` in plain mode and is ignored in lex
    mode.
    """
    if mode not in (PLAIN, LEX):
        raise ValueError("mode must be 'plain' or 'lex'")
    basis = list(basis)
    if len(basis) != instance.m or len(set(basis)) != len(basis):
        raise ValueError("basis must list %d distinct columns" % instance.m)
    if any(not 0 <= j < instance.n for j in basis):
        raise ValueError("basis index out of range")
    cols = [instance.columns[j] for j in basis]
    try:
        inv = mat_inverse([list(r) for r in zip(*cols)])
    except SingularMatrix as exc:
        raise SingularBasis("A_beta is singular for basis %s" % [j + 1 for j in basis]) from exc
    if mode == PLAIN:
        rhs = instance.b if rhs is None else rhs
    else:
        rhs = None
    return SimplexState(instance, basis, inv, mode, rhs, check=check)


def dual_solution(state: SimplexState) -> list[Fraction]:
    """``y' = c_beta' A_beta^{-1}``."""
    return list(state.y)


def reduced_cost(state: SimplexState, j: int) -> Fraction:
    col = state.instance.columns[j]
    return state.instance.c[j] - sum((yk * a for yk, a in zip(state.y, col)), Fraction(0))


def _scaled_reduced_costs(state: SimplexState):
    """Yield ``(j, D*rc_j)`` for nonbasic columns, D the common denominator of y.

    Columns and costs are integers, so this prices in integer arithmetic.
    """
    D = 1
    for yk in state.y:
        D = D * yk.denominator // math.gcd(D, yk.denominator)
    N = [yk.numerator * (D // yk.denominator) for yk in state.y]
    basic = set(state.basis)
    c = state.instance.c
    for j, col in enumerate(state.instance.columns):
        if j in basic:
            continue
        yield j, c[j] * D - sum(a * nk for a, nk in zip(col, N))


def choose_entering(state: SimplexState, rule: str = DANTZIG) -> int | None:
    """Most negative reduced cost (ties: lowest index), or Bland's lowest index."""
    best, best_val = None, 0
    for j, v in _scaled_reduced_costs(state):
        if v < 0:
            if rule == BLAND:
                return j
            if v < best_val:
                best, best_val = j, v
    return best


def ratio_test(state: SimplexState, direction: Sequence[Fraction], rule: str = DANTZIG) -> int | None:
    """Leaving basis position for entering direction ``inv @ A_j``, or None if unbounded.

    Plain mode breaks ties by lowest basis position (lowest variable index
    under Bland).  In lex mode the minimiser is unique; a tie raises
    :class:`InvariantViolation`.
    """
    if len(direction) != state.m:
        raise ValueError("direction has wrong length")
    best, best_ratio = None, None
    tie = False
    for l, d in enumerate(direction):
        if d <= 0:
            continue
        ratio = state.xb[l] / d
        if best is None or ratio < best_ratio:
            best, best_ratio, tie = l, ratio, False
        elif ratio == best_ratio:
            tie = True
            if state.mode == PLAIN and rule == BLAND and state.basis[l] < state.basis[best]:
                best = l
    if tie and state.mode == LEX:
        raise InvariantViolation("lex ratio test produced a tie")
    return best


def pivot(state: SimplexState, enter: int, leave: int,
          direction: Sequence[Fraction] | None = None) -> SimplexState:
    """Bring column ``enter`` into basis position ``leave``, updating ``inv`` in place."""
    d = state.direction(enter) if direction is None else list(direction)
    p = d[leave]
    if p == 0:
        raise PivotError("zero pivot element at position %d" % (leave + 1))
    inv = state.inv
    prow = [x / p for x in inv[leave]]
    for k in range(state.m):
        if k == leave:
            inv[k] = prow
        elif d[k] != 0:
            f = d[k]
            inv[k] = [x - f * y for x, y in zip(inv[k], prow)]
    state.basis[leave] = enter
    state.pivot_count += 1
    state._since_refactor += 1
    if state._since_refactor >= state.refactor_every:
        refactor(state)
    elif state.check:
        state.check_inverse()
    state.refresh()
    return state


def refactor(state: SimplexState) -> None:
    """Recompute ``inv`` from scratch; it must agree exactly with the updated one."""
    fresh = mat_inverse(state.basis_matrix())
    if state.check:
        _require(fresh == state.inv, "refactored inverse differs from updated inverse")
    state.inv = fresh
    state._since_refactor = 0


@dataclass(frozen=True)
class PivotInfo:
    """What a pivot looked like from the state just before it."""

    enter: int
    leave: int
    left_column: int
    y_before: tuple
    inv_row_before: tuple
    direction: tuple


def primal_simplex(state: SimplexState, entering: str = DANTZIG,
                   max_pivots: int | None = None,
                   on_pivot: Callable[[SimplexState, PivotInfo], None] | None = None) -> LPResult:
    """Run the primal simplex method from a feasible state until it stops.

    ``on_pivot(state, info)`` is called after every pivot.
    """
    if not state.is_feasible():
        raise ContractViolation("primal_simplex needs a primal-feasible starting basis")
    count = 0
    while True:
        j = choose_entering(state, entering)
        if j is None:
            return LPResult(LPStatus.OPTIMAL, count)
        if max_pivots is not None and count >= max_pivots:
            return LPResult(LPStatus.LIMIT, count)
        d = state.direction(j)
        l = ratio_test(state, d, entering)
        if l is None:
            return LPResult(LPStatus.UNBOUNDED, count, unbounded_column=j)
        info = PivotInfo(j, l, state.basis[l], tuple(state.y), tuple(state.inv[l]), tuple(d))
        pivot(state, j, l, d)
        count += 1
        if state.check and state.mode == LEX:
            _require(all(not x.is_zero() for x in state.xb), "degenerate lex basis")
            _require(state.is_feasible(), "lex basis lost feasibility")
            _require(tuple(state.y) < info.y_before, "dual solution did not lex-decrease")
        if on_pivot is not None:
            on_pivot(state, info)


def _unit_sign(col: Sequence[int]) -> tuple[int, int] | None:
    """``(k, s)`` if ``col == s * e_k`` with ``s`` in {1, -1}."""
    nz = [(k, a) for k, a in enumerate(col) if a != 0]
    if len(nz) == 1 and nz[0][1] in (1, -1):
        return nz[0]
    return None


def phase_one(instance: DualFormInstance, mode: str = PLAIN, check: bool = True,
              max_pivots: int | None = None) -> SimplexState:
    """Find a primal-feasible basis of ``A x = rhs, x >= 0``.

    Rows that already have a suitably signed unit column use it directly;
    the rest get an artificial column.  The artificial objective is then
    minimised (Bland's rule in plain mode, lex ratio test in lex mode) and
    any artificial left at zero level is pivoted out.  Raises
    :class:`PrimalInfeasible` if the artificial optimum is positive.
    """
    m, n = instance.m, instance.n
    if mode == LEX:
        want = [1] * m
    else:
        want = [1 if bk >= 0 else -1 for bk in instance.b]
    basis: list[int | None] = [None] * m
    for j, col in enumerate(instance.columns):
        u = _unit_sign(col)
        if u is not None and basis[u[0]] is None and u[1] == want[u[0]]:
            basis[u[0]] = j
    if all(j is not None for j in basis):
        state = factor_basis(instance, basis, mode, check=check)
        state.phase_one_pivots = 0
        return state

    aux = instance.copy()
    aux.c = [0] * n
    artificial = set()
    for k in range(m):
        if basis[k] is None:
            col = [0] * m
            col[k] = want[k]
            basis[k] = aux.add_column(col, 1)
            artificial.add(basis[k])
    state = factor_basis(aux, basis, mode, check=check)
    rule = DANTZIG if mode == LEX else BLAND
    res = primal_simplex(state, rule, max_pivots=max_pivots)
    if res.status is LPStatus.LIMIT:
        raise PrimalInfeasible("phase one hit the pivot limit")
    if res.status is LPStatus.UNBOUNDED:
        raise InvariantViolation("phase one objective is bounded below by zero")
    value = state.objective()
    if (value.sign() if mode == LEX else (value > 0)) > 0:
        raise PrimalInfeasible("no x >= 0 satisfies A x = rhs (phase-one optimum %s)" % (value,))
    for l in range(m):
        if state.basis[l] not in artificial:
            continue
        if mode == LEX:
            raise InvariantViolation("artificial basic at lex-zero level")
        basic = set(state.basis)
        for j in range(n):
            if j not in basic and state.direction(j)[l] != 0:
                pivot(state, j, l)
                break
        else:
            raise InvariantViolation("cannot drive artificial out; A is rank deficient")
    final = factor_basis(instance, state.basis, mode, check=check)
    final.phase_one_pivots = state.pivot_count
    return final
