"""Words over an integer alphabet, bar-words, and position-set extraction.

Letters are plain non-negative ints.  A Word is a finite sequence of letters;
a BarWord w1|w2|...|wk is a sequence of non-empty words, with the empty
sequence acting as the unit.  Everything here is immutable after construction
and safe to share between threads.

Positions inside a word are 1-based throughout.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator

_DEFAULT_NAMES = "abcdefghijklmnopqrstuvwxyz"


class Word:
    """A word a_{i1} a_{i2} ... a_{in}; degree is the letter count."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[int] = ()):
        self.letters = tuple(letters)
        self._hash = hash(self.letters)

    @property
    def degree(self) -> int:
        return len(self.letters)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def _key(self):
        return (len(self.letters), self.letters)

    def __lt__(self, other: "Word") -> bool:
        # Degree first, then letter sequence: the canonical output order.
        return self._key() < other._key()

    def __repr__(self) -> str:
        return f"Word({word_str(self)})"


class BarWord:
    """w1|...|wk, a sequence of non-empty words.

    Empty factors are dropped on construction, so w1|1|w2 and w1|w2 denote
    the same value; the empty factor sequence is the algebra unit.
    """

    __slots__ = ("factors", "degree", "_hash")

    def __init__(self, factors: Iterable[Word] = ()):
        self.factors = tuple(w for w in factors if w.letters)
        self.degree = sum(len(w) for w in self.factors)
        self._hash = hash(self.factors)

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def __eq__(self, other) -> bool:
        return isinstance(other, BarWord) and self.factors == other.factors

    def __hash__(self) -> int:
        return self._hash

    def _key(self):
        return (self.degree, len(self.factors), tuple(w._key() for w in self.factors))

    def __lt__(self, other: "BarWord") -> bool:
        return self._key() < other._key()

    def __repr__(self) -> str:
        return f"BarWord({barword_str(self)})"


EMPTY_WORD = Word()
UNIT = BarWord()


def lift(w: Word) -> BarWord:
    """The single-factor bar-word |w| (the unit if w is empty)."""
    return BarWord((w,))


def bar_concat(a: BarWord, b: BarWord) -> BarWord:
    """Concatenation of factor sequences, the product of the bar algebra."""
    return BarWord(a.factors + b.factors)


def subword(w: Word, positions: Iterable[int]) -> Word:
    """Letters of w at the given 1-based positions, in increasing order.

    Duplicate positions collapse; an empty position set gives the empty word.
    """
    taken = sorted(set(positions))
    n = len(w.letters)
    if taken and not (1 <= taken[0] and taken[-1] <= n):
        raise ValueError(f"positions {taken} out of range for a degree-{n} word")
    return Word(w.letters[p - 1] for p in taken)


def complement_components(w: Word, positions: Iterable[int]) -> BarWord:
    """The bar-word of maximal unextracted runs of w.

    Removing the letters at `positions` from [1..n] leaves a union of
    maximal integer intervals; each becomes one factor, in increasing order.
    """
    taken = set(positions)
    n = len(w.letters)
    if taken and not all(1 <= p <= n for p in taken):
        raise ValueError(f"positions {sorted(taken)} out of range for a degree-{n} word")
    runs: list[Word] = []
    current: list[int] = []
    for p in range(1, n + 1):
        if p in taken:
            if current:
                runs.append(Word(current))
                current = []
        else:
            current.append(w.letters[p - 1])
    if current:
        runs.append(Word(current))
    return BarWord(runs)


def all_words(n_letters: int, max_degree: int, min_degree: int = 1) -> Iterator[Word]:
    """All words over letters 0..n_letters-1, by degree then lexicographic."""
    if n_letters < 1:
        raise ValueError("alphabet must have at least one letter")
    for degree in range(min_degree, max_degree + 1):
        for letters in itertools.product(range(n_letters), repeat=degree):
            yield Word(letters)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Ordered sequences of positive parts summing to n (2^(n-1) of them)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def all_barwords(
    n_letters: int, max_degree: int, include_unit: bool = False
) -> Iterator[BarWord]:
    """All bar-words of degree 1..max_degree, optionally preceded by the unit."""
    if include_unit:
        yield UNIT
    for degree in range(1, max_degree + 1):
        for parts in compositions(degree):
            for letters in itertools.product(range(n_letters), repeat=degree):
                factors = []
                at = 0
                for part in parts:
                    factors.append(Word(letters[at : at + part]))
                    at += part
                yield BarWord(factors)


def word_str(w: Word, names: Iterable[str] = _DEFAULT_NAMES) -> str:
    """Human-readable form of a word; the empty word prints as 1."""
    names = tuple(names)
    if w.is_empty:
        return "1"
    if all(i < len(names) for i in w.letters) and all(len(n) == 1 for n in names):
        return "".join(names[i] for i in w.letters)
    return ".".join(
        names[i] if i < len(names) else f"<{i}>" for i in w.letters
    )


def barword_str(u: BarWord, names: Iterable[str] = _DEFAULT_NAMES) -> str:
    """Human-readable form of a bar-word; the unit prints as 1."""
    if u.is_unit:
        return "1"
    names = tuple(names)
    return "|".join(word_str(w, names) for w in u.factors)
