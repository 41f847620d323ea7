"""Integer data ``(A, b, c)`` of ``max y'b  s.t.  y'A <= c', y integer``."""
from __future__ import annotations

from typing import Sequence

from .errors import DimensionError, RankError, ValidationError
from .exact import rank


def _as_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        # accept integral objects such as numpy ints or Fraction(5)
        try:
            if int(x) == x and not isinstance(x, float):
                return int(x)
        except (TypeError, ValueError):
            pass
        raise ValidationError("%s must be an integer, got %r" % (what, x))
    return x


class DualFormInstance:
    """Dual-form integer program, stored column-wise.

    Each constraint ``y'A_j <= c_j`` is one column of ``A``.  Columns may be
    appended (cuts) after construction; ``n_original`` remembers how many
    columns came with the input.  Indices are 0-based internally.
    """

    def __init__(self, A: Sequence[Sequence[int]], b: Sequence[int], c: Sequence[int],
                 name: str | None = None, check_rank: bool = True):
        A = [list(row) for row in A]
        m = len(A)
        if m == 0:
            raise DimensionError("A must have at least one row")
        n = len(A[0])
        for k, row in enumerate(A):
            if len(row) != n:
                raise DimensionError("row %d of A has length %d, expected %d" % (k + 1, len(row), n))
        if len(b) != m:
            raise DimensionError("b has length %d, expected m=%d" % (len(b), m))
        if len(c) != n:
            raise DimensionError("c has length %d, expected n=%d" % (len(c), n))
        self.b = tuple(_as_int(x, "b[%d]" % (k + 1)) for k, x in enumerate(b))
        self.columns = [
            tuple(_as_int(A[k][j], "A[%d][%d]" % (k + 1, j + 1)) for k in range(m))
            for j in range(n)
        ]
        self.c = [_as_int(x, "c[%d]" % (j + 1)) for j, x in enumerate(c)]
        self.name = name
        self.n_original = n
        if check_rank:
            r = rank(self.rows)
            if r < m:
                raise RankError("A has rank %d, but full row rank m=%d is required" % (r, m))

    @property
    def m(self) -> int:
        return len(self.b)

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def rows(self) -> list[list[int]]:
        return [list(r) for r in zip(*self.columns)]

    A = rows

    def column(self, j: int) -> tuple[int, ...]:
        return self.columns[j]

    def add_column(self, col: Sequence[int], cost: int) -> int:
        """Append an integer column with integer cost; returns its index."""
        if len(col) != self.m:
            raise DimensionError("column has length %d, expected %d" % (len(col), self.m))
        col = tuple(_as_int(x, "column entry") for x in col)
        self.columns.append(col)
        self.c.append(_as_int(cost, "column cost"))
        return len(self.columns) - 1

    def find_column(self, col: Sequence[int], cost: int) -> int | None:
        col = tuple(col)
        for j, (a, cj) in enumerate(zip(self.columns, self.c)):
            if a == col and cj == cost:
                return j
        return None

    def copy(self) -> DualFormInstance:
        new = DualFormInstance.__new__(DualFormInstance)
        new.b = self.b
        new.columns = list(self.columns)
        new.c = list(self.c)
        new.name = self.name
        new.n_original = self.n_original
        return new

    def is_feasible(self, y: Sequence[int]) -> bool:
        return all(
            sum(yk * a for yk, a in zip(y, col)) <= cj for col, cj in zip(self.columns, self.c)
        )

    def objective(self, y: Sequence) -> int:
        return sum(yk * bk for yk, bk in zip(y, self.b))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualFormInstance):
            return NotImplemented
        return (self.b, self.columns, self.c) == (other.b, other.columns, other.c)

    def __repr__(self) -> str:
        return "DualFormInstance(m=%d, n=%d%s)" % (
            self.m, self.n, ", name=%r" % self.name if self.name else "")
