"""Cut-and-reoptimise loops.

:func:`solve_plain` runs the loop on the instance as given: optimise the
primal, cut off a fractional dual solution with one or more cut columns,
re-optimise from the current basis, repeat.  It has no termination
guarantee.

:func:`solve_lex` first lifts the instance (objective moved into a
constraint on a new integer variable ``y0``) and runs the same loop with a
lexicographically perturbed right-hand side, always cutting on the first
fractional coordinate with the minimal shift.  That variant terminates.
"""
from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .cutgen import CutColumn, derive_cut_column, format_inequality
from .errors import ContractViolation, InvariantViolation, PrimalInfeasible, UnboundedRelaxation
from .instance import DualFormInstance
from .oracle import Boundedness, continuous_ranges
from .simplex import (DANTZIG, LEX, PLAIN, LPStatus, PivotInfo, SimplexState,
                      phase_one, primal_simplex, reduced_cost)

log = logging.getLogger(__name__)

OPTIMAL = "Optimal"
INTEGER_INFEASIBLE = "IntegerInfeasible"
LIMIT_REACHED = "LimitReached"

MIN_FRACTIONAL = "min"
ALL_FRACTIONAL = "all"

DEFAULT_MAX_CUTS = 10_000

NO_TERMINATION_GUARANTEE = "plain mode has no termination guarantee"


@dataclass(frozen=True)
class TraceEvent:
    kind: str  # "pivot" | "cut" | "opt"
    data: dict


TraceSink = Callable[[TraceEvent], None]


@dataclass(frozen=True)
class CutSummary:
    column: int  # 1-based column number in the working instance
    b_tilde: tuple[int, ...]
    cost: int
    source_i: int  # 0-based coordinate of the working instance
    text: str


@dataclass
class SolveReport:
    status: str
    mode: str
    y_star: list[int] | None = None
    z_star: int | None = None
    pivot_count: int = 0
    cut_count: int = 0
    objective_trace: list[Fraction] = field(default_factory=list)
    cut_trace: list[CutSummary] = field(default_factory=list)
    final_y: list[Fraction] = field(default_factory=list)
    limit_kind: str | None = None
    caveat: str | None = None
    cuts: list[CutColumn] = field(default_factory=list)
    lifted: bool = False
    checks: Counter = field(default_factory=Counter)
    unbounded_column: int | None = None  # 1-based; set when the primal went unbounded

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


@dataclass
class LexifiedInstance:
    """Base instance plus its lifted form with leading variable ``y0``.

    Lifted constraints are ``y0 - y'b <= 0`` (column 0) followed by the base
    columns ``y'A_j <= c_j``; lifted coordinate ``k + 1`` is base
    coordinate ``k``.
    """

    base: DualFormInstance
    lifted: DualFormInstance

    def to_base(self, y_lifted: Sequence) -> list:
        return list(y_lifted[1:])

    def to_lifted(self, y: Sequence) -> list:
        return [self.base.objective(y)] + list(y)

    def base_column(self, j: int) -> int:
        """Base column index of lifted column ``j`` (None for the objective row)."""
        return j - 1 if j >= 1 else None


def lexify(instance: DualFormInstance) -> LexifiedInstance:
    m = instance.m
    rows = [[1] + [0] * instance.n]
    for k, row in enumerate(instance.rows):
        rows.append([-instance.b[k]] + list(row))
    lifted = DualFormInstance(rows, [1] + [0] * m, [0] + list(instance.c),
                              name=instance.name, check_rank=False)
    return LexifiedInstance(instance, lifted)


def choose_source_index(y_bar: Sequence[Fraction], policy: str = MIN_FRACTIONAL):
    """Smallest fractional index (``min``), all of them (``all``), or None."""
    frac = [i for i, v in enumerate(y_bar) if Fraction(v).denominator != 1]
    if not frac:
        return None
    if policy == MIN_FRACTIONAL:
        return frac[0]
    if policy == ALL_FRACTIONAL:
        return frac
    raise ValueError("unknown source policy %r" % policy)


def check_boundedness(instance: DualFormInstance) -> Boundedness:
    """Status ``bounded``/``unbounded``/``empty`` of ``{y : y'A <= c'}``."""
    return continuous_ranges(instance)


def default_pivot_cap(m: int, n: int, cuts: int) -> int:
    return 10 * (m + n + cuts) ** 2


def _require(cond, msg):
    if not cond:
        raise InvariantViolation(msg)


def _check(report: SolveReport, name: str, cond, msg: str) -> None:
    _require(cond, msg)
    report.checks[name] += 1


class _CutLoop:
    """State shared by both solve modes."""

    def __init__(self, work: DualFormInstance, mode: str, policy: str, entering: str,
                 max_pivots: int | None, max_cuts: int, dedupe: bool,
                 sink: TraceSink | None, check: bool, names: list[str]):
        self.work = work
        self.mode = mode
        self.policy = policy
        self.entering = entering
        self.max_pivots = max_pivots
        self.max_cuts = max_cuts
        self.dedupe = dedupe
        self.sink = sink
        self.check = check
        self.names = names
        self.report = SolveReport(status=OPTIMAL, mode=mode, lifted=(mode == LEX))
        self.last_y: tuple | None = None
        self.pending: dict[int, CutColumn] = {}
        self.first_pivot_after_cut = False
        self.recording = False

    def emit(self, kind, **data):
        if self.sink is not None:
            self.sink(TraceEvent(kind, data))

    def z(self, state: SimplexState) -> Fraction:
        return state.dual_objective() if self.mode == PLAIN else state.y[0]

    def pivot_cap(self) -> int | None:
        if self.max_pivots is not None:
            return self.max_pivots
        return default_pivot_cap(self.work.m, self.work.n_original, self.report.cut_count)

    def on_pivot(self, state: SimplexState, info: PivotInfo) -> None:
        rep = self.report
        rep.pivot_count += 1
        y_new = tuple(state.y)
        if self.check:
            _check(rep, "basis_cardinality", len(state.basis) == self.work.m, "basis cardinality changed")
            if self.mode == LEX:
                _check(rep, "lex_decrease", info.y_before == self.last_y and y_new < self.last_y,
                       "dual sequence not strictly lex-decreasing")
        if self.first_pivot_after_cut:
            self.first_pivot_after_cut = False
            cut = self.pending.get(info.enter)
            if self.check and cut is not None:
                self._check_first_pivot(cut, info, y_new)
        self.last_y = y_new
        if self.recording:
            rep.objective_trace.append(self.z(state))
        self.emit("pivot", enter=info.enter + 1, leave=info.left_column + 1,
                  position=info.leave + 1, z=self.z(state))

    def _check_first_pivot(self, cut: CutColumn, info: PivotInfo, y_new: tuple) -> None:
        i = cut.source_i
        l = info.leave
        rep = self.report
        _require(info.direction[l] == cut.w[l], "entering direction differs from w")
        step = (math.floor(cut.parent_y[i]) - cut.parent_y[i]) / cut.w[l]
        closed = tuple(y + step * h for y, h in zip(info.y_before, info.inv_row_before))
        _check(rep, "closed_form_update", closed == y_new,
               "closed-form dual update disagrees with c_beta' inv")
        if self.mode == LEX:
            prefix_down = y_new[:i] < info.y_before[:i]
            _check(rep, "first_pivot_dichotomy", prefix_down or y_new[i] <= math.floor(info.y_before[i]),
                     "first pivot after a cut neither lex-decreased the prefix nor rounded y_%d" % i)

    def optimise(self, state: SimplexState):
        cap = self.pivot_cap()
        remaining = max(cap - self.report.pivot_count, 0)
        return primal_simplex(state, self.entering, max_pivots=remaining, on_pivot=self.on_pivot)

    def add_cuts(self, state: SimplexState, sources: list[int]) -> list[int]:
        new_cols = []
        seen = set()
        self.pending = {}
        for i in sources:
            cut = derive_cut_column(state, i)
            if self.check:
                _check(self.report, "cut_fractional",
                       Fraction(sum(y * a for y, a in zip(cut.parent_y, cut.b_tilde))).denominator > 1,
                       "y'bt is integral")
            if self.dedupe and (cut.key in seen or self.work.find_column(*cut.key) is not None):
                continue
            seen.add(cut.key)
            j = self.work.add_column(cut.b_tilde, cut.cost)
            if self.check:
                rc = reduced_cost(state, j)
                _check(self.report, "cut_reduced_cost", -1 < rc < 0,
                       "new column reduced cost %s outside (-1, 0)" % rc)
            self.pending[j] = cut
            self.report.cuts.append(cut)
            self.report.cut_count += 1
            text = format_inequality(cut.b_tilde, cut.cost, self.names)
            self.report.cut_trace.append(CutSummary(j + 1, cut.b_tilde, cut.cost, i, text))
            self.emit("cut", column=j + 1, source=i, text=text, b_tilde=cut.b_tilde, cost=cut.cost)
            new_cols.append(j)
        if self.check:
            _check(self.report, "integrality",
                   all(isinstance(a, int) for col in self.work.columns for a in col)
                   and all(isinstance(v, int) for v in self.work.c), "instance lost integrality")
            negative = {j for j in range(self.work.n)
                        if j not in state.basis and reduced_cost(state, j) < 0}
            _check(self.report, "unique_improving", negative == set(new_cols),
                   "improving columns other than the new cuts")
        self.first_pivot_after_cut = True
        return new_cols

    def run(self, integer_coords: range) -> tuple[SolveReport, SimplexState | None]:
        rep = self.report
        self.recording = False
        try:
            state = phase_one(self.work, self.mode, check=self.check)
        except PrimalInfeasible as exc:
            raise ContractViolation(
                "primal infeasible: the continuous relaxation is unbounded or empty") from exc
        rep.pivot_count += state.phase_one_pivots
        self.last_y = tuple(state.y)
        res = self.optimise(state)
        while True:
            if res.status is LPStatus.LIMIT:
                rep.status, rep.limit_kind = LIMIT_REACHED, "pivots"
                break
            if res.status is LPStatus.UNBOUNDED:
                rep.status = INTEGER_INFEASIBLE
                rep.unbounded_column = res.unbounded_column + 1
                if self.mode == PLAIN:
                    rep.caveat = NO_TERMINATION_GUARANTEE + "; unbounded primal reported as infeasible"
                break
            if not self.recording:
                rep.objective_trace.append(self.z(state))
                self.recording = True
            self.emit("opt", z=self.z(state), y=list(state.y))
            y_int = [state.y[k] for k in integer_coords]
            picked = choose_source_index(y_int, self.policy)
            if picked is None:
                rep.status = OPTIMAL
                break
            if rep.cut_count >= self.max_cuts:
                rep.status, rep.limit_kind = LIMIT_REACHED, "cuts"
                break
            sources = [picked] if isinstance(picked, int) else picked
            offset = integer_coords.start
            self.add_cuts(state, [offset + s for s in sources])
            res = self.optimise(state)
        rep.final_y = list(state.y)
        return rep, state


def solve_plain(instance: DualFormInstance, source: str = MIN_FRACTIONAL, entering: str = DANTZIG,
                max_pivots: int | None = None, max_cuts: int = DEFAULT_MAX_CUTS, dedupe: bool = True,
                sink: TraceSink | None = None, check: bool = True) -> SolveReport:
    """Cut-and-reoptimise on ``instance`` with RHS ``b``.

    ``objective_trace`` holds the first LP optimum followed by ``y'b``
    after every pivot of each re-optimisation.  May hit a cap: no
    termination guarantee.
    """
    work = instance.copy()
    names = ["y%d" % (k + 1) for k in range(work.m)]
    loop = _CutLoop(work, PLAIN, source, entering, max_pivots, max_cuts, dedupe, sink, check, names)
    rep, state = loop.run(range(0, work.m))
    rep.caveat = rep.caveat or NO_TERMINATION_GUARANTEE
    if rep.status == OPTIMAL:
        rep.y_star = [int(v) for v in state.y]
        rep.z_star = instance.objective(rep.y_star)
        _require(instance.is_feasible(rep.y_star), "y_star infeasible")
    return rep


def solve_lex(instance: DualFormInstance, max_pivots: int | None = None,
              max_cuts: int = DEFAULT_MAX_CUTS, entering: str = DANTZIG,
              check_bounded: bool = True, sink: TraceSink | None = None,
              check: bool = True) -> SolveReport:
    """Finitely terminating cut loop on the lifted, lex-perturbed problem.

    Returns the lexicographically greatest optimal ``y`` (first coordinate
    most significant).  Requires ``{y : y'A <= c'}`` to be nonempty and
    bounded; with ``check_bounded`` this is verified first and an
    unbounded region raises :class:`UnboundedRelaxation`.
    """
    if check_bounded:
        bd = check_boundedness(instance)
        if bd.status == "unbounded":
            raise UnboundedRelaxation(
                "continuous relaxation unbounded in y%d; lex mode needs a bounded region"
                % (bd.coordinate + 1), coordinate=bd.coordinate, direction=bd.direction)
        if bd.status == "empty":
            return SolveReport(status=INTEGER_INFEASIBLE, mode=LEX, lifted=True,
                               caveat="continuous relaxation is empty")
    lx = lexify(instance)
    work = lx.lifted
    names = ["y%d" % k for k in range(work.m)]
    loop = _CutLoop(work, LEX, MIN_FRACTIONAL, entering, max_pivots, max_cuts, True, sink, check, names)
    rep, state = loop.run(range(0, work.m))
    if rep.status == OPTIMAL:
        y = [int(v) for v in lx.to_base(state.y)]
        rep.y_star = y
        rep.z_star = instance.objective(y)
        _require(rep.z_star == state.y[0], "y0 differs from y'b at the optimum")
        _require(instance.is_feasible(y), "y_star infeasible")
    log.debug("lex solve: %s after %d pivots, %d cuts", rep.status, rep.pivot_count, rep.cut_count)
    return rep
