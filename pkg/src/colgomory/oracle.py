"""Brute-force ground truth for small bounded instances.

The continuous range of each coordinate is found with ``2m`` exact LP
solves; the integer points in the resulting box are then enumerated with
numpy and filtered against ``y'A <= c'``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import EmptyRelaxation, PrimalInfeasible, TooLarge, UnboundedRelaxation
from .instance import DualFormInstance
from .simplex import BLAND, PLAIN, LPStatus, phase_one, primal_simplex

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class IntegerBox:
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("box bounds differ in length")

    @property
    def is_empty(self) -> bool:
        return any(lo > hi for lo, hi in zip(self.lower, self.upper))

    @property
    def volume(self) -> int:
        if self.is_empty:
            return 0
        return math.prod(hi - lo + 1 for lo, hi in zip(self.lower, self.upper))


@dataclass
class Boundedness:
    status: str  # "bounded" | "unbounded" | "empty"
    lower: list[Fraction] = field(default_factory=list)
    upper: list[Fraction] = field(default_factory=list)
    coordinate: int | None = None
    direction: int | None = None

    @property
    def bounded(self) -> bool:
        return self.status == "bounded"


def _with_rhs(instance: DualFormInstance, rhs) -> DualFormInstance:
    aux = instance.copy()
    aux.b = tuple(rhs)
    return aux


def continuous_ranges(instance: DualFormInstance) -> Boundedness:
    """Exact ``min y_i`` and ``max y_i`` over ``{y : y'A <= c'}``.

    Maximising ``s * y_i`` is the dual-form problem with objective
    ``s * e_i``; its primal is infeasible exactly when that direction is
    unbounded (given a nonempty region), and its optimal dual solution is
    the maximiser.
    """
    m = instance.m
    # region nonempty  <=>  min c'x, A x = 0, x >= 0 is bounded
    st = phase_one(_with_rhs(instance, [0] * m), PLAIN)
    if primal_simplex(st, BLAND).status is LPStatus.UNBOUNDED:
        return Boundedness("empty")
    lower, upper = [], []
    for i in range(m):
        for s in (1, -1):
            rhs = [0] * m
            rhs[i] = s
            try:
                st = phase_one(_with_rhs(instance, rhs), PLAIN)
            except PrimalInfeasible:
                return Boundedness("unbounded", coordinate=i, direction=s)
            res = primal_simplex(st, BLAND)
            assert res.status is LPStatus.OPTIMAL, res
            (upper if s == 1 else lower).append(st.y[i])
    return Boundedness("bounded", lower, upper)


def bounding_box(instance: DualFormInstance) -> IntegerBox:
    res = continuous_ranges(instance)
    if res.status == "empty":
        raise EmptyRelaxation("the continuous relaxation is empty")
    if res.status == "unbounded":
        raise UnboundedRelaxation(
            "y%d is unbounded %s" % (res.coordinate + 1, "above" if res.direction > 0 else "below"),
            coordinate=res.coordinate, direction=res.direction)
    return IntegerBox(tuple(math.ceil(q) for q in res.lower), tuple(math.floor(q) for q in res.upper))


def _int_dtype(instance: DualFormInstance, box: IntegerBox):
    ymax = max([abs(v) for v in box.lower + box.upper] + [1])
    amax = max([abs(a) for col in instance.columns for a in col] + [abs(v) for v in instance.b] + [1])
    cmax = max([abs(v) for v in instance.c] + [1])
    worst = instance.m * ymax * amax + cmax
    return np.int64 if worst < 2**62 else object


def _chunks(box: IntegerBox, dtype, chunk: int = 1 << 16):
    ranges = [range(lo, hi + 1) for lo, hi in zip(box.lower, box.upper)]
    it = itertools.product(*ranges)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        yield np.array(block, dtype=dtype).reshape(len(block), len(ranges))


def feasible_points(instance: DualFormInstance, box: IntegerBox | None = None,
                    cap: int = DEFAULT_CAP) -> np.ndarray:
    """All integer ``y`` in ``box`` with ``y'A <= c'``, in lexicographic order."""
    if box is None:
        box = bounding_box(instance)
    if box.volume > cap:
        raise TooLarge("box holds %d points, cap is %d" % (box.volume, cap))
    dtype = _int_dtype(instance, box)
    A = np.array(instance.rows, dtype=dtype).reshape(instance.m, instance.n)
    c = np.array(instance.c, dtype=dtype)
    found = [Y[np.all(Y @ A <= c, axis=1)] for Y in _chunks(box, dtype)]
    if not found:
        return np.zeros((0, instance.m), dtype=dtype)
    return np.concatenate(found)


@dataclass
class OracleResult:
    z: int | None
    argmax: list[tuple[int, ...]]
    n_feasible: int

    @property
    def feasible(self) -> bool:
        return self.z is not None

    @property
    def lex_max(self) -> tuple[int, ...] | None:
        return max(self.argmax) if self.argmax else None


def brute_force_optimum(instance: DualFormInstance, box: IntegerBox | None = None,
                        cap: int = DEFAULT_CAP) -> OracleResult:
    """Enumerate the box; return the optimum and the full optimal set.

    Without an explicit box an empty relaxation gives an infeasible result.
    """
    if box is None:
        try:
            box = bounding_box(instance)
        except EmptyRelaxation:
            return OracleResult(None, [], 0)
    pts = feasible_points(instance, box, cap)
    if len(pts) == 0:
        return OracleResult(None, [], 0)
    vals = pts @ np.array(instance.b, dtype=pts.dtype)
    z = vals.max()
    best = sorted(tuple(int(v) for v in row) for row in pts[vals == z])
    return OracleResult(int(z), best, len(pts))
