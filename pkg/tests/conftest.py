import random
from pathlib import Path

import pytest

from colgomory import DualFormInstance

DATA = Path(__file__).parent / "data"

EX3_A = [[7, 8, -1, 1, 3], [5, 6, -1, 2, 1]]
EX3_B = [26, 19]
EX3_C = [126, 141, -10, 5, 67]


@pytest.fixture
def ex3():
    return DualFormInstance(EX3_A, EX3_B, EX3_C, name="worked example")


@pytest.fixture
def data_dir():
    return DATA


def boxed_instance(rng: random.Random, m=None, seeded=True):
    """Random bounded instance: m in {2,3}, n <= 6 before the box rows.

    With ``seeded`` the costs are built around a random integer point so
    most instances are integer-feasible; box rows +-e_i are appended.
    """
    m = m or rng.choice([2, 3])
    n = rng.randint(1, 6)
    A = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
    if seeded:
        p = [rng.randint(-4, 4) for _ in range(m)]
        c = [max(-50, min(50, sum(p[k] * A[k][j] for k in range(m)) + rng.randint(0, 6)))
             for j in range(n)]
    else:
        c = [rng.randint(-50, 50) for _ in range(n)]
    b = [rng.randint(-5, 5) for _ in range(m)]
    for i in range(m):
        upper, lower = rng.randint(0, 10), rng.randint(0, 10)
        for k in range(m):
            A[k] += [int(k == i), -int(k == i)]
        c += [upper, lower]
    return DualFormInstance(A, b, c)


def forced_fraction_instance(rng: random.Random, m: int):
    """Bounded, nonempty relaxation without integer points.

    Row 1 is pinned by the pair ``k*y1 <= p``, ``-k*y1 <= -p`` with ``p/k``
    fractional; the other coordinates get box rows.
    """
    k = rng.randint(2, 5)
    p = rng.choice([q for q in range(-20, 21) if q % k])
    cols, c = [], []
    e = lambda i, s: [s * int(t == i) for t in range(m)]
    cols += [[k] + [0] * (m - 1), [-k] + [0] * (m - 1)]
    c += [p, -p]
    for i in range(1, m):
        cols += [e(i, 1), e(i, -1)]
        c += [rng.randint(0, 5), rng.randint(0, 5)]
    # a couple of random extra rows that keep the pinned slab nonempty
    for _ in range(rng.randint(0, 2)):
        col = [0] + [rng.randint(-3, 3) for _ in range(m - 1)]
        cols.append(col)
        c.append(sum(abs(a) for a in col) * 5)
    A = [list(r) for r in zip(*cols)]
    b = [rng.randint(-5, 5) for _ in range(m)]
    return DualFormInstance(A, b, c)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
