"""Exact scalars and lexicographic epsilon-polynomials.

Rationals are plain :class:`fractions.Fraction` objects, which are kept in
lowest terms with a positive denominator after every operation.  The rest of
the package calls them "exact rationals" and relies on that canonical form
for O(1) integrality tests.

A :class:`LexValue` is a polynomial ``a0 + a1*eps + ... + a(d-1)*eps**(d-1)``
in an infinitesimal ``eps > 0``.  Comparing two of them is the same as
comparing their coefficient tuples lexicographically.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence

__all__ = [
    "Fraction",
    "LexValue",
    "as_fraction",
    "floor",
    "fractional_part",
    "is_integral",
    "lex_compare",
    "lex_scale_add",
    "mat_inverse",
    "mat_mul",
    "mat_vec",
    "rank",
    "vec_mat",
    "format_mixed",
]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted, got %r" % x)
    return Fraction(x)


def floor(q: Fraction) -> int:
    return math.floor(q)


def fractional_part(q: Fraction) -> Fraction:
    return q - math.floor(q)


def is_integral(q: Fraction) -> bool:
    return Fraction(q).denominator == 1


def format_mixed(q: Fraction) -> str:
    """Render ``q`` as a mixed number, e.g. ``463 1/2`` or ``-10``.

    Negative values keep the sign on the whole part: ``-7/2`` is ``-3 1/2``.
    """
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    whole, rem = divmod(abs(q.numerator), q.denominator)
    if whole == 0:
        return "%s%d/%d" % (sign, rem, q.denominator)
    return "%s%d %d/%d" % (sign, whole, rem, q.denominator)


@total_ordering
class LexValue:
    """Immutable coefficient vector ordered lexicographically.

    ``coeffs[k]`` is the coefficient of ``eps**k``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", tuple(as_fraction(a) for a in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("LexValue is immutable")

    @classmethod
    def zero(cls, length: int) -> LexValue:
        return cls([0] * length)

    @classmethod
    def unit(cls, k: int, length: int) -> LexValue:
        """The monomial ``eps**k``."""
        return cls([1 if j == k else 0 for j in range(length)])

    @classmethod
    def constant(cls, q, length: int) -> LexValue:
        return cls([q] + [0] * (length - 1))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def _check(self, other: LexValue) -> None:
        if not isinstance(other, LexValue):
            raise TypeError("expected LexValue, got %s" % type(other).__name__)
        if len(other.coeffs) != len(self.coeffs):
            raise ValueError(
                "LexValue length mismatch: %d vs %d" % (len(self.coeffs), len(other.coeffs))
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LexValue):
            return NotImplemented
        self._check(other)
        return self.coeffs == other.coeffs

    def __lt__(self, other: LexValue) -> bool:
        self._check(other)
        return self.coeffs < other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: LexValue) -> LexValue:
        self._check(other)
        return LexValue(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: LexValue) -> LexValue:
        self._check(other)
        return LexValue(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> LexValue:
        return LexValue(-a for a in self.coeffs)

    def __mul__(self, s) -> LexValue:
        s = as_fraction(s)
        return LexValue(s * a for a in self.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, s) -> LexValue:
        s = as_fraction(s)
        return LexValue(a / s for a in self.coeffs)

    def sign(self) -> int:
        """Sign of the first nonzero coefficient (0 for the zero polynomial)."""
        for a in self.coeffs:
            if a:
                return 1 if a > 0 else -1
        return 0

    def is_positive(self) -> bool:
        return self.sign() > 0

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        return "LexValue(%s)" % ", ".join(str(a) for a in self.coeffs)


def lex_compare(a: LexValue, b: LexValue) -> int:
    """Return -1, 0 or 1 as ``a`` is lex-less, equal or greater than ``b``."""
    a._check(b)
    for x, y in zip(a.coeffs, b.coeffs):
        if x != y:
            return -1 if x < y else 1
    return 0


def lex_scale_add(acc: LexValue, s, v: LexValue) -> LexValue:
    """``acc + s*v``, componentwise and exact."""
    acc._check(v)
    s = as_fraction(s)
    return LexValue(a + s * x for a, x in zip(acc.coeffs, v.coeffs))


# -- small dense exact linear algebra -------------------------------------

Matrix = Sequence[Sequence[Fraction]]


def mat_mul(X: Matrix, Y: Matrix) -> list[list[Fraction]]:
    cols = list(zip(*Y))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in X]


def mat_vec(X: Matrix, v: Sequence) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in X]


def vec_mat(v: Sequence, X: Matrix) -> list[Fraction]:
    return [sum((a * b for a, b in zip(v, col)), Fraction(0)) for col in zip(*X)]


def _row_reduce(M: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan elimination on the first ``ncols`` columns, in place."""
    pivots = []
    r = 0
    rows = len(M)
    for col in range(ncols):
        p = next((i for i in range(r, rows) if M[i][col] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][col]
        M[r] = [x / piv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][col] != 0:
                f = M[i][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    return M, pivots


def rank(M: Matrix) -> int:
    work = [[as_fraction(x) for x in row] for row in M]
    if not work:
        return 0
    _, pivots = _row_reduce(work, len(work[0]))
    return len(pivots)


class SingularMatrix(ArithmeticError):
    pass


def mat_inverse(M: Matrix) -> list[list[Fraction]]:
    """Exact inverse of a square matrix; raises :class:`SingularMatrix`."""
    m = len(M)
    work = [
        [as_fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(m)]
        for i, row in enumerate(M)
    ]
    work, pivots = _row_reduce(work, m)
    if len(pivots) < m:
        raise SingularMatrix("matrix is singular (rank %d < %d)" % (len(pivots), m))
    return [row[m:] for row in work]
