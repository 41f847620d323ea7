"""Random bounded instances: lex solver against brute-force enumeration."""
import random
import time

import numpy as np

from colgomory import DualFormInstance, brute_force_optimum, solve_lex

rng = random.Random(0)


def random_instance(m, n):
    A = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
    p = [rng.randint(-4, 4) for _ in range(m)]
    c = [sum(p[k] * A[k][j] for k in range(m)) + rng.randint(0, 6) for j in range(n)]
    for i in range(m):
        for k in range(m):
            A[k] += [int(k == i), -int(k == i)]
        c += [rng.randint(0, 10), rng.randint(0, 10)]
    return DualFormInstance(A, [rng.randint(-5, 5) for _ in range(m)], c)


cuts, agree = [], 0
t0 = time.perf_counter()
for _ in range(50):
    inst = random_instance(rng.choice([2, 3]), rng.randint(1, 6))
    rep, orc = solve_lex(inst), brute_force_optimum(inst)
    agree += (rep.z_star == orc.z) and (rep.y_star is None or tuple(rep.y_star) == orc.lex_max)
    cuts.append(rep.cut_count)
print("agreement: %d/50 in %.2fs" % (agree, time.perf_counter() - t0))
print("cuts per solve: mean %.1f, max %d" % (np.mean(cuts), max(cuts)))
