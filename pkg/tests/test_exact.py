from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from colgomory.exact import (LexValue, fractional_part, format_mixed, is_integral, lex_compare,
                             lex_scale_add, mat_inverse, rank)


def lv(*xs):
    return LexValue(xs)


@pytest.mark.parametrize("a, b, expected", [
    (lv(0, 0), lv(0, 0), 0),
    (lv(1, -5), lv(1, -4), -1),
    (lv(F(3, 5), 0, 2), lv(F(1, 2), 99, 99), 1),
])
def test_lex_compare_examples(a, b, expected):
    assert lex_compare(a, b) == expected
    assert lex_compare(b, a) == -expected


def test_lex_compare_length_mismatch():
    with pytest.raises(ValueError):
        lex_compare(lv(1, 2), lv(1, 2, 3))
    with pytest.raises(ValueError):
        lv(1) < lv(1, 2)


def test_lex_scale_add_examples():
    assert lex_scale_add(lv(1, 2), 0, lv(9, 9)) == lv(1, 2)
    assert lex_scale_add(lv(0, 0), 1, lv(F(-5, 2), F(7, 2))) == lv(F(-5, 2), F(7, 2))


def test_lex_scale_add_matches_recomputed_dual():
    # y at basis (1,6) of the worked example via the 2x2 adjugate formula
    (a, b), (c, d) = (7, 4), (5, 3)
    det = a * d - b * c
    inv = [[F(d, det), F(-b, det)], [F(-c, det), F(a, det)]]
    cb = (126, 70)
    y = tuple(cb[0] * inv[0][k] + cb[1] * inv[1][k] for k in range(2))
    assert y == (28, -14)
    assert lex_scale_add(lv(F(51, 2), F(-21, 2)), -1, lv(F(-5, 2), F(7, 2))) == LexValue(y)


def test_lex_scale_add_length_mismatch():
    with pytest.raises(ValueError):
        lex_scale_add(lv(1), 2, lv(1, 2))


def test_sign_and_positivity():
    assert lv(0, 0, F(1, 3)).is_positive()
    assert not lv(0, -1, 5).is_positive()
    assert lv(0, 0).sign() == 0
    assert LexValue.unit(2, 3) == lv(0, 0, 1)


def test_lexvalue_rejects_floats():
    with pytest.raises(TypeError):
        LexValue([0.5])


def test_format_mixed():
    assert format_mixed(F(927, 2)) == "463 1/2"
    assert format_mixed(F(2304, 5)) == "460 4/5"
    assert format_mixed(F(460)) == "460"
    assert format_mixed(F(-7, 2)) == "-3 1/2"
    assert format_mixed(F(1, 3)) == "1/3"


def test_integrality_helpers():
    assert is_integral(F(4, 2))
    assert not is_integral(F(-21, 2))
    assert fractional_part(F(-21, 2)) == F(1, 2)


def test_rank_and_inverse():
    assert rank([[1, 2], [2, 4]]) == 1
    assert mat_inverse([[7, 8], [5, 6]]) == [[3, -4], [F(-5, 2), F(7, 2)]]


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def vectors(d):
    return st.lists(rationals, min_size=d, max_size=d).map(LexValue)


@given(rationals, rationals)
def test_embedding_preserves_order(p, q):
    assert lex_compare(LexValue.constant(p, 3), LexValue.constant(q, 3)) == (p > q) - (p < q)


@given(vectors(3), vectors(3), vectors(3))
def test_total_order(a, b, c):
    ab, ba = lex_compare(a, b), lex_compare(b, a)
    assert ab == -ba
    assert (ab == 0) == (a == b)
    if a < b and b < c:
        assert a < c
    if a < b:
        assert a + c < b + c


@given(vectors(4), rationals, vectors(4))
def test_scale_add_canonical(acc, s, v):
    out = lex_scale_add(acc, s, v)
    for x, a, y in zip(out, acc, v):
        assert x == a + s * y
        assert x.denominator > 0
        from math import gcd
        assert gcd(abs(x.numerator), x.denominator) == 1
