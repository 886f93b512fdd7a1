"""Infinitesimal characters as word tables, the triangle product, and the
Magnus expansion with its inverse.

An InfChar stores the values of an infinitesimal character on every word up
to a degree bound; off the single-word part the character is zero by
definition.  The triangle product a > b - b < a of two infinitesimal
characters is again one, so closing the tables under triangle stays exact.

Bernoulli numbers follow the convention B_1 = -1/2, which is the one under
which the Magnus expansion reads  a - (1/2) a|>a + ...  The Magnus map and
its inverse direction W are mutually inverse on the graded truncation, and
nothing is computed beyond the table bound.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import IncompleteTableError
from .forms import LEFT, RIGHT, Conv, InfinitesimalFromWords, Scale
from .words import Word, all_words

_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli(m: int) -> Fraction:
    """B_m with B_1 = -1/2; computed by the standard binomial recurrence."""
    if m < 0:
        raise ValueError("Bernoulli numbers are indexed by m >= 0")
    while len(_BERNOULLI) <= m:
        k = len(_BERNOULLI)
        acc = Fraction(0)
        for j in range(k):
            acc += comb(k + 1, j) * _BERNOULLI[j]
        _BERNOULLI.append(-acc / (k + 1))
    return _BERNOULLI[m]


class InfChar:
    """Values of an infinitesimal character on all words up to a bound."""

    __slots__ = ("n_letters", "max_degree", "table")

    def __init__(self, n_letters: int, max_degree: int, table):
        if n_letters < 1:
            raise ValueError("alphabet must have at least one letter")
        if max_degree < 1:
            raise ValueError("the degree bound must be at least 1")
        self.n_letters = n_letters
        self.max_degree = max_degree
        given = dict(table)
        self.table = {}
        for w in all_words(n_letters, max_degree):
            try:
                self.table[w] = Fraction(given.pop(w))
            except KeyError:
                raise IncompleteTableError(
                    f"infinitesimal character table is missing {w!r}", word=w
                ) from None
        if given:
            raise ValueError(
                f"table has entries outside the alphabet/bound: {sorted(given)[:3]}"
            )

    @classmethod
    def zero(cls, n_letters: int, max_degree: int) -> "InfChar":
        return cls(
            n_letters,
            max_degree,
            {w: Fraction(0) for w in all_words(n_letters, max_degree)},
        )

    def value(self, w: Word) -> Fraction:
        return self.table[w]

    def as_form(self) -> InfinitesimalFromWords:
        return InfinitesimalFromWords(self.table)

    def _combine(self, other: "InfChar", fn) -> "InfChar":
        if (self.n_letters, self.max_degree) != (other.n_letters, other.max_degree):
            raise ValueError("infinitesimal characters live on different truncations")
        return InfChar(
            self.n_letters,
            self.max_degree,
            {w: fn(self.table[w], other.table[w]) for w in self.table},
        )

    def __add__(self, other: "InfChar") -> "InfChar":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "InfChar") -> "InfChar":
        return self._combine(other, lambda a, b: a - b)

    def scale(self, c) -> "InfChar":
        c = Fraction(c)
        return InfChar(
            self.n_letters, self.max_degree, {w: c * v for w, v in self.table.items()}
        )

    def __neg__(self) -> "InfChar":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, InfChar)
            and self.n_letters == other.n_letters
            and self.max_degree == other.max_degree
            and self.table == other.table
        )

    def __repr__(self) -> str:
        return f"InfChar(letters={self.n_letters}, max_degree={self.max_degree})"


def triangle(a: InfChar, b: InfChar) -> InfChar:
    """The pre-Lie product a > b - b < a, tabulated on words."""
    if (a.n_letters, a.max_degree) != (b.n_letters, b.max_degree):
        raise ValueError("infinitesimal characters live on different truncations")
    fa, fb = a.as_form(), b.as_form()
    form = Conv(RIGHT, fa, fb) + Scale(Fraction(-1), Conv(LEFT, fb, fa))
    return InfChar(
        a.n_letters,
        a.max_degree,
        {w: form.eval_word(w) for w in all_words(a.n_letters, a.max_degree)},
    )


def w_map(a: InfChar) -> InfChar:
    """Sum over k of L_{a|>}^k(a) / (k+1)!, truncated by the table bound.

    The k-th iterate vanishes on degrees <= k, so k stops at the bound - 1.
    """
    total = a  # the k = 0 term has coefficient 1/1! = 1
    iterate = a
    for k in range(1, a.max_degree):
        iterate = triangle(a, iterate)
        total = total + iterate.scale(Fraction(1, factorial(k + 1)))
    return total


def magnus(a: InfChar) -> InfChar:
    """The inverse of w_map on the truncation, by graded fixed-point iteration.

    Iterates  om <- sum_m (B_m/m!) L_{om|>}^m(a);  the degree-n slice is
    final after n passes, so the table goes literally stable within
    max_degree + 1 passes and the loop exits on exact equality.
    """
    om = a
    for _ in range(a.max_degree + 1):
        iterate = a
        new = a.scale(bernoulli(0))  # = a
        for m in range(1, a.max_degree):
            iterate = triangle(om, iterate)
            b_m = bernoulli(m)
            if b_m:
                new = new + iterate.scale(b_m / factorial(m))
        if new == om:
            return om
        om = new
    raise RuntimeError("Magnus iteration failed to stabilize; this is a bug")
