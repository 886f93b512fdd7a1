import pytest

from cumulants.words import (
    EMPTY_WORD,
    UNIT,
    BarWord,
    Word,
    all_barwords,
    all_words,
    bar_concat,
    barword_str,
    complement_components,
    lift,
    subword,
    word_str,
)


def test_word_basics():
    w = Word((0, 1, 0))
    assert w.degree == 3
    assert w.letters == (0, 1, 0)
    assert Word(()) == EMPTY_WORD
    assert EMPTY_WORD.degree == 0


def test_word_ordering_is_degree_then_lex():
    # degree dominates: 'b' < 'aa' even though lexicographically it would not
    assert Word((1,)) < Word((0, 0))
    assert Word((0, 1)) < Word((1, 0))
    ws = sorted([Word((1, 0)), Word((0,)), Word((0, 0)), Word((1,))])
    assert ws == [Word((0,)), Word((1,)), Word((0, 0)), Word((1, 0))]


def test_barword_drops_empty_factors():
    u = BarWord((Word((0,)), EMPTY_WORD, Word((1, 1))))
    assert u.factors == (Word((0,)), Word((1, 1)))
    assert u.degree == 3
    assert BarWord((EMPTY_WORD, EMPTY_WORD)) == UNIT
    assert UNIT.is_unit and not u.is_unit


def test_bar_concat_is_associative_with_unit():
    a = lift(Word((0,)))
    b = lift(Word((1, 0)))
    assert bar_concat(a, UNIT) == a
    assert bar_concat(UNIT, b) == b
    assert bar_concat(bar_concat(a, b), a) == bar_concat(a, bar_concat(b, a))


def test_subword_uses_one_based_positions():
    w = Word((0, 1, 2, 3))
    assert subword(w, (1, 3)) == Word((0, 2))
    assert subword(w, (4,)) == Word((3,))
    # order and duplicates are ignored, positions are a set
    assert subword(w, (3, 1, 3)) == Word((0, 2))
    with pytest.raises(ValueError):
        subword(w, (0,))
    with pytest.raises(ValueError):
        subword(w, (5,))


def test_complement_components_splits_into_runs():
    w = Word((0, 1, 2, 3, 4))
    # removing positions 1 and 4 leaves the runs 23 and 5
    u = complement_components(w, (1, 4))
    assert u == BarWord((Word((1, 2)), Word((4,))))
    assert complement_components(w, (1, 2, 3, 4, 5)) == UNIT
    assert complement_components(w, ()) == lift(w)


def test_all_words_counts_and_order():
    ws = list(all_words(2, 3))
    assert len(ws) == 2 + 4 + 8
    assert ws[0] == Word((0,))
    assert ws == sorted(ws)
    assert [w.degree for w in ws] == sorted(w.degree for w in ws)


def test_all_barwords_counts():
    # compositions of n into k parts give 2**(n-1) barwords per degree n,
    # times the letter choices
    bars = list(all_barwords(1, 3))
    assert len(bars) == 1 + 2 + 4
    assert list(all_barwords(1, 3, include_unit=True))[0] == UNIT


def test_display_forms():
    assert word_str(Word((0, 1, 0))) == "aba"
    assert barword_str(BarWord((Word((0,)), Word((1, 1))))) == "a|bb"
    assert barword_str(UNIT) == "1"
    assert word_str(Word((0, 1)), names=("x1", "x2")) == "x1.x2"
