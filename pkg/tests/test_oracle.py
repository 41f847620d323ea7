import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from colgomory import DualFormInstance
from colgomory.errors import EmptyRelaxation, TooLarge, UnboundedRelaxation
from colgomory.oracle import IntegerBox, bounding_box, brute_force_optimum, feasible_points

from conftest import boxed_instance


def naive_optimum(inst, box):
    best, arg = None, []
    for y in itertools.product(*[range(lo, hi + 1) for lo, hi in zip(box.lower, box.upper)]):
        if inst.is_feasible(y):
            v = inst.objective(y)
            if best is None or v > best:
                best, arg = v, [y]
            elif v == best:
                arg.append(y)
    return best, sorted(arg)


def test_ex3_box_and_optimum(ex3):
    box = bounding_box(ex3)
    for y in [(25, -10), (25, -11), (26, -10), (26, -11)]:
        assert all(lo <= v <= hi for v, lo, hi in zip(y, box.lower, box.upper))
    res = brute_force_optimum(ex3, box)
    assert res.z == 460 and (25, -10) in res.argmax


def test_small_box():
    inst = DualFormInstance([[2, -1]], [1], [3, 0])
    assert bounding_box(inst) == IntegerBox((0,), (1,))
    res = brute_force_optimum(inst)
    assert res.z == 1 and res.argmax == [(1,)]


def test_empty_and_unbounded():
    with pytest.raises(EmptyRelaxation):
        bounding_box(DualFormInstance([[1, -1]], [1], [0, -1]))
    with pytest.raises(UnboundedRelaxation) as exc:
        bounding_box(DualFormInstance([[1]], [1], [0]))
    assert exc.value.direction == -1


def test_forced_half_infeasible():
    res = brute_force_optimum(DualFormInstance([[2, -2]], [1], [1, -1]))
    assert not res.feasible and res.argmax == []


def test_cap():
    inst = DualFormInstance([[1, -1, 0, 0], [0, 0, 1, -1]], [1, 1], [1000, 1000, 1000, 1000])
    with pytest.raises(TooLarge):
        brute_force_optimum(inst, cap=10**5)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_box_against_scipy(seed):
    inst = boxed_instance(random.Random(seed))
    A = inst.rows
    for i in range(inst.m):
        obj = [0] * inst.m
        obj[i] = 1
        lo = linprog(obj, A_ub=list(map(list, zip(*A))), b_ub=inst.c, bounds=[(None, None)] * inst.m,
                     method="highs")
        if lo.status == 2:
            with pytest.raises(EmptyRelaxation):
                bounding_box(inst)
            return
        hi = linprog([-v for v in obj], A_ub=list(map(list, zip(*A))), b_ub=inst.c,
                     bounds=[(None, None)] * inst.m, method="highs")
        box = bounding_box(inst)
        assert box.lower[i] == math.ceil(lo.fun - 1e-9)
        assert box.upper[i] == math.floor(-hi.fun + 1e-9)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_enumeration_matches_naive_and_partition(seed, parts):
    inst = boxed_instance(random.Random(seed))
    res = brute_force_optimum(inst)
    try:
        box = bounding_box(inst)
    except EmptyRelaxation:
        assert not res.feasible
        return
    z, arg = naive_optimum(inst, box)
    assert res.z == z and res.argmax == arg
    # split the first coordinate into slabs and merge by value
    lo, hi = box.lower[0], box.upper[0]
    cuts = sorted(random.Random(seed).sample(range(lo, hi + 1), min(parts - 1, max(hi - lo, 0))))
    edges = [lo] + [c + 1 for c in cuts] + [hi + 1]
    merged = []
    for a, b in zip(edges, edges[1:]):
        if a >= b:
            continue
        sub = IntegerBox((a,) + box.lower[1:], (b - 1,) + box.upper[1:])
        merged += [tuple(int(v) for v in p) for p in feasible_points(inst, sub)]
    if merged:
        best = max(inst.objective(p) for p in merged)
        assert best == res.z
        assert sorted(p for p in merged if inst.objective(p) == best) == res.argmax
    else:
        assert not res.feasible
