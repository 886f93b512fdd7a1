"""Subset-extraction coproducts on words and bar-words.

The coproduct of a word a_1...a_n extracts the subword at a position set S
on the left and leaves the bar-word of maximal unextracted runs on the
right, one term per subset (2^n in total).  On bar-words it extends
multiplicatively, multiplying legs by bar-concatenation, with the unit
grouplike.  The half variants split the terms by whether position 1 is
extracted:

    left half   keeps the subsets with 1 in S (so the left leg never
                vanishes; includes the w (x) unit term),
    right half  keeps the subsets with 1 not in S (includes unit (x) w).

On multi-factor bar-words each half applies to the first factor and the
full coproduct to the rest.  Both halves are undefined on the unit.

All maps return shared, memoized LinComb values over pairs of bar-words
(pairs of plain words for the reduced linearised variant), so callers must
treat results as immutable.  The cache size can be capped with the
CUMULANTS_CACHE_CAP environment variable; by default it is unbounded, which
is safe because inputs are degree-bounded in every pipeline.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .lincomb import LinComb
from .words import (
    UNIT,
    BarWord,
    Word,
    bar_concat,
    complement_components,
    lift,
    subword,
)

_cap = os.environ.get("CUMULANTS_CACHE_CAP")
_CACHE_CAP = int(_cap) if _cap else None
del _cap


def split_product(s: LinComb, t: LinComb) -> LinComb:
    """Componentwise bar-concatenation of two leg-pair combinations."""
    acc: dict = {}
    for (x1, y1), c1 in s.items():
        for (x2, y2), c2 in t.items():
            key = (bar_concat(x1, x2), bar_concat(y1, y2))
            value = acc.get(key, 0) + c1 * c2
            if value:
                acc[key] = value
            elif key in acc:
                del acc[key]
    return LinComb._raw(acc)


def _subset_terms(w: Word, masks) -> LinComb:
    """One (subword, complement runs) pair per position-set mask."""
    n = len(w.letters)
    acc: dict = {}
    for mask in masks:
        positions = [p for p in range(1, n + 1) if mask >> (p - 1) & 1]
        key = (lift(subword(w, positions)), complement_components(w, positions))
        acc[key] = acc.get(key, 0) + 1
    return LinComb._raw(acc)


@lru_cache(maxsize=_CACHE_CAP)
def _coproduct_word(w: Word) -> LinComb:
    n = len(w.letters)
    return _subset_terms(w, range(1 << n))


@lru_cache(maxsize=_CACHE_CAP)
def _coproduct_left_word(w: Word) -> LinComb:
    # Position 1 extracted: odd masks only.
    n = len(w.letters)
    return _subset_terms(w, range(1, 1 << n, 2))


@lru_cache(maxsize=_CACHE_CAP)
def _coproduct_right_word(w: Word) -> LinComb:
    # Position 1 kept: even masks, the empty set included.
    n = len(w.letters)
    return _subset_terms(w, range(0, 1 << n, 2))


@lru_cache(maxsize=_CACHE_CAP)
def coproduct(u: BarWord) -> LinComb:
    """The full coproduct; grouplike on the unit, multiplicative on factors."""
    if u.is_unit:
        return LinComb.term((UNIT, UNIT))
    out = _coproduct_word(u.factors[0])
    for w in u.factors[1:]:
        out = split_product(out, _coproduct_word(w))
    return out


@lru_cache(maxsize=_CACHE_CAP)
def coproduct_left(u: BarWord) -> LinComb:
    """Left half-coproduct: first factor split with position 1 extracted."""
    if u.is_unit:
        raise ValueError("the half-coproducts are undefined on the unit bar-word")
    out = _coproduct_left_word(u.factors[0])
    for w in u.factors[1:]:
        out = split_product(out, _coproduct_word(w))
    return out


@lru_cache(maxsize=_CACHE_CAP)
def coproduct_right(u: BarWord) -> LinComb:
    """Right half-coproduct: first factor split with position 1 kept."""
    if u.is_unit:
        raise ValueError("the half-coproducts are undefined on the unit bar-word")
    out = _coproduct_right_word(u.factors[0])
    for w in u.factors[1:]:
        out = split_product(out, _coproduct_word(w))
    return out


def coproduct_reduced(u: BarWord) -> LinComb:
    """Coproduct with both unit-leg terms removed; undefined on the unit."""
    if u.is_unit:
        raise ValueError("the reduced coproduct is undefined on the unit bar-word")
    return coproduct(u) - LinComb([((u, UNIT), 1), ((UNIT, u), 1)])


def coproduct_left_reduced(u: BarWord) -> LinComb:
    """Left half with the u (x) unit term removed."""
    return coproduct_left(u) - LinComb.term((u, UNIT))


def coproduct_right_reduced(u: BarWord) -> LinComb:
    """Right half with the unit (x) u term removed."""
    return coproduct_right(u) - LinComb.term((UNIT, u))


@lru_cache(maxsize=_CACHE_CAP)
def reduced_linearised(w: Word) -> LinComb:
    """Middle-interval extraction with single-word legs.

    Splits [1..n] into consecutive intervals I1, I2, I3 with I2 non-empty
    and I1 u I3 non-empty; each split contributes the pair (word on I1 then
    I3, word on I2).  Keys are (Word, Word) pairs.
    """
    letters = w.letters
    n = len(letters)
    acc: dict = {}
    for i in range(n + 1):  # I1 = positions 1..i
        for j in range(i + 1, n + 1):  # I2 = positions i+1..j
            if i == 0 and j == n:
                continue
            key = (Word(letters[:i] + letters[j:]), Word(letters[i:j]))
            acc[key] = acc.get(key, 0) + 1
    return LinComb._raw(acc)


@lru_cache(maxsize=_CACHE_CAP)
def iterated_reduced_left(w: Word, q: int) -> LinComb:
    """(q-1)-fold left iteration of the reduced linearised coproduct.

    Keys are q-tuples of non-empty words; the interval extracted last sits
    in the final slot.  Defined for 1 <= q <= degree(w).
    """
    n = len(w.letters)
    if not 1 <= q <= n:
        raise ValueError(f"q must be between 1 and the degree {n}, got {q}")
    if q == 1:
        return LinComb.term((w,))
    acc: dict = {}
    for (rest, extracted), c in reduced_linearised(w).items():
        if rest.degree < q - 1:
            continue
        for head, d in iterated_reduced_left(rest, q - 1).items():
            key = head + (extracted,)
            value = acc.get(key, 0) + c * d
            if value:
                acc[key] = value
            elif key in acc:
                del acc[key]
    return LinComb._raw(acc)
