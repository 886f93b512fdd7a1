from fractions import Fraction as F

import pytest

from cumulants.errors import IncompleteTableError
from cumulants.prelie import InfChar, bernoulli, magnus, triangle, w_map
from cumulants.words import Word, all_words


def univariate(degree, values):
    return InfChar(1, degree, {Word((0,) * n): F(v) for n, v in zip(range(1, degree + 1), values)})


def test_bernoulli_prefix():
    expect = [F(1), F(-1, 2), F(1, 6), F(0), F(-1, 30), F(0), F(1, 42)]
    assert [bernoulli(m) for m in range(7)] == expect


def test_infchar_requires_total_tables():
    with pytest.raises(IncompleteTableError):
        InfChar(1, 3, {Word((0,)): F(1), Word((0, 0)): F(2)})
    with pytest.raises(ValueError):
        InfChar(1, 1, {Word((0,)): F(1), Word((0, 0)): F(2)})


def test_infchar_arithmetic():
    a = univariate(2, (1, 2))
    b = univariate(2, (3, -1))
    assert (a + b).value(Word((0,))) == 4
    assert (a - b).value(Word((0, 0))) == 3
    assert (-a).value(Word((0,))) == -1
    assert a.scale(F(1, 2)).value(Word((0, 0))) == 1


def test_triangle_cube_value():
    # frozen: (a > a) - (a < a) on aaa is 2 k1 k2 - 3 k1 k2 = -k1 k2
    a = univariate(3, (2, 3, 5))
    assert triangle(a, a).value(Word((0, 0, 0))) == -(2 * 3)


def test_triangle_degree_one_vanishes():
    a = univariate(3, (2, 3, 5))
    assert triangle(a, a).value(Word((0,))) == 0


def test_magnus_cube_value():
    # frozen: Omega(kappa)(a^3) = k3 + k1 k2 / 2
    a = univariate(3, (2, 3, 5))
    assert magnus(a).value(Word((0, 0, 0))) == F(5) + F(2 * 3, 2)


def test_w_cube_value():
    # frozen: W(rho)(a^3) = h3 - h1 h2 / 2
    a = univariate(3, (2, 3, 5))
    assert w_map(a).value(Word((0, 0, 0))) == F(5) - F(2 * 3, 2)


def test_magnus_and_w_are_mutually_inverse():
    a = InfChar(
        2,
        4,
        {w: F(hash(w.letters) % 7 - 3, 2) for w in all_words(2, 4)},
    )
    assert w_map(magnus(a)) == a
    assert magnus(w_map(a)) == a


def test_magnus_w_inverse_univariate_deeper():
    a = univariate(6, (1, -2, 3, -4, 5, -6))
    assert w_map(magnus(a)) == a
    assert magnus(w_map(a)) == a


def test_prelie_left_identity():
    a = univariate(4, (1, 2, -1, 3))
    b = univariate(4, (2, -3, 1, 0))
    c = univariate(4, (-1, 1, 4, -2))
    lhs = triangle(triangle(a, b), c) - triangle(a, triangle(b, c))
    rhs = triangle(triangle(b, a), c) - triangle(b, triangle(a, c))
    assert lhs == rhs


def test_magnus_of_zero_is_zero():
    z = InfChar.zero(1, 3)
    assert magnus(z) == z
    assert w_map(z) == z
