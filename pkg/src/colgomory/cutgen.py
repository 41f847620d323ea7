"""Gomory cuts for the dual-form problem, packaged as primal columns.

Given a basis with dual solution ``y`` and a fractional ``y_i``, pick an
integer shift ``r`` with ``r_k >= -floor(h_ki)`` (``h = A_beta^{-1}``).
The column ``bt = e_i + A_beta r`` with cost ``floor(y'bt)`` is a valid cut
``y'bt <= floor(y'bt)`` for every integer-feasible ``y`` and it cuts off
the current dual solution.  Appending it to ``A`` keeps ``A`` and ``c``
integer, so the procedure can be repeated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InvalidShift, InvariantViolation, NotFractional
from .simplex import SimplexState


@dataclass(frozen=True)
class CutColumn:
    b_tilde: tuple[int, ...]
    cost: int
    source_i: int
    r: tuple[int, ...]
    w: tuple[Fraction, ...]
    parent_y: tuple[Fraction, ...]
    parent_basis: tuple[int, ...] = field(default=())

    @property
    def violation(self) -> Fraction:
        """``y'bt - floor(y'bt)`` at the parent dual solution, in (0, 1)."""
        return sum((y * a for y, a in zip(self.parent_y, self.b_tilde)), Fraction(0)) - self.cost

    @property
    def key(self) -> tuple:
        return (self.b_tilde, self.cost)

    def format(self, names: Sequence[str] | None = None) -> str:
        return format_inequality(self.b_tilde, self.cost, names)


def format_inequality(coeffs: Sequence[int], rhs, names: Sequence[str] | None = None) -> str:
    """``4 y1 + 3 y2 <= 70`` style rendering (1-based names by default)."""
    if names is None:
        names = ["y%d" % (k + 1) for k in range(len(coeffs))]
    terms = []
    for a, name in zip(coeffs, names):
        if a == 0:
            continue
        mag = abs(a)
        body = name if mag == 1 else "%s %s" % (mag, name)
        if not terms:
            terms.append(("-" if a < 0 else "") + body)
        else:
            terms.append(("- " if a < 0 else "+ ") + body)
    lhs = " ".join(terms) if terms else "0"
    return "%s <= %s" % (lhs, rhs)


def minimal_r(h_col: Sequence) -> list[int]:
    """Smallest integer shift with ``h_col + r >= 0``: ``r_k = -floor(h_k)``."""
    return [-math.floor(Fraction(h)) for h in h_col]


def derive_cut_column(state: SimplexState, i: int, r: Sequence[int] | None = None) -> CutColumn:
    """Cut column from fractional dual coordinate ``i`` (0-based).

    ``r=None`` uses the minimal shift.  An explicit ``r`` must satisfy
    ``r_k >= -floor(h_ki)``.
    """
    y = state.y
    if y[i].denominator == 1:
        raise NotFractional("y[%d] = %s is integral" % (i + 1, y[i]))
    m = state.m
    h = [state.inv[k][i] for k in range(m)]
    r_min = minimal_r(h)
    if r is None:
        r = r_min
    else:
        r = [int(x) for x in r]
        if len(r) != m:
            raise InvalidShift("r must have length %d" % m)
        bad = [k for k in range(m) if r[k] < r_min[k]]
        if bad:
            raise InvalidShift("r[%d] = %d < -floor(h) = %d" % (bad[0] + 1, r[bad[0]], r_min[bad[0]]))
    B = state.basis_matrix()
    bt = tuple(int(k == i) + sum(B[k][t] * r[t] for t in range(m)) for k in range(m))
    ytb = sum((yk * a for yk, a in zip(y, bt)), Fraction(0))
    # integral part is c_beta'r, fractional part that of y_i
    if ytb.denominator == 1:
        raise InvariantViolation("y'bt = %s is integral although y_i is not" % ytb)
    w = tuple(hk + rk for hk, rk in zip(h, r))
    if any(wk < 0 for wk in w):
        raise InvariantViolation("shift leaves a negative multiplier")
    return CutColumn(
        b_tilde=bt,
        cost=math.floor(ytb),
        source_i=i,
        r=tuple(r),
        w=w,
        parent_y=tuple(y),
        parent_basis=tuple(state.basis),
    )


@dataclass(frozen=True)
class CutInequality:
    """The cut rewritten as ``y_i <= floor(ybar_i) + (c_beta' - y'A_beta) r``."""

    source_i: int
    floor_yi: int
    basis_matrix: tuple[tuple[int, ...], ...]
    basic_costs: tuple[int, ...]
    r: tuple[int, ...]
    coeffs: tuple[int, ...]
    rhs: int

    def bound_at(self, y: Sequence) -> Fraction:
        """Right-hand side of the rewritten form evaluated at ``y``."""
        m = len(self.r)
        slack = [
            self.basic_costs[t] - sum((Fraction(y[k]) * self.basis_matrix[k][t] for k in range(m)), Fraction(0))
            for t in range(m)
        ]
        return self.floor_yi + sum((s * rt for s, rt in zip(slack, self.r)), Fraction(0))

    def lhs_at(self, y: Sequence) -> Fraction:
        return sum((Fraction(a) * yk for a, yk in zip(self.coeffs, y)), Fraction(0))

    def is_violated_by(self, y: Sequence) -> bool:
        return Fraction(y[self.source_i]) > self.bound_at(y)

    def __str__(self) -> str:
        return format_inequality(self.coeffs, self.rhs)


def cut_as_inequality(cut: CutColumn, state: SimplexState) -> CutInequality:
    B = state.basis_matrix()
    return CutInequality(
        source_i=cut.source_i,
        floor_yi=math.floor(cut.parent_y[cut.source_i]),
        basis_matrix=tuple(tuple(row) for row in B),
        basic_costs=tuple(state.instance.c[j] for j in state.basis),
        r=cut.r,
        coeffs=cut.b_tilde,
        rhs=cut.cost,
    )


def validate_cut(cut: CutColumn, y: Sequence[int]) -> bool:
    """True when the integer point ``y`` satisfies ``y'bt <= cost``."""
    return sum(a * yk for a, yk in zip(cut.b_tilde, y)) <= cut.cost
