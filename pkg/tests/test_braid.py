import random

import pytest

from hecketrace.braid import (BraidSyntaxError, BraidWord, Letter, conjugate, exponent_sum_s,
                              format_word, markov_stabilize, parse_braid, random_word,
                              skein_site_triple)


def test_parse_basic():
    w = parse_braid("s1 s2^-1 s1 t s1^-1 s2")
    assert w.strands == 3
    assert [(l.gen, l.sign) for l in w.letters] == [(1, 1), (2, -1), (1, 1), (0, 1), (1, -1), (2, 1)]


def test_parse_exponents_expand():
    w = parse_braid("s1^-3 t^2")
    assert format_word(w) == "s1^-1 s1^-1 s1^-1 t t"
    assert exponent_sum_s(w) == -3


def test_zero_exponent_expands_to_nothing():
    assert parse_braid("t^0 s2^0").letters == ()


def test_empty_word_is_one_strand():
    w = parse_braid("")
    assert w.letters == () and w.strands == 1


def test_strands_override():
    assert parse_braid("t s1", 4).strands == 4
    with pytest.raises(ValueError):
        parse_braid("s3", 2)


@pytest.mark.parametrize("text, pos", [("s1 x2", 3), ("s0", 0), ("s1^", 0), ("t s1 ^2", 5)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(BraidSyntaxError) as info:
        parse_braid(text)
    assert info.value.position == pos


def test_format_round_trip():
    rng = random.Random(1)
    for _ in range(50):
        w = random_word(rng, 5, 12)
        assert parse_braid(format_word(w), w.strands) == w


def test_inverse_and_concat():
    w = parse_braid("t s1 s2^-1")
    assert format_word(w.inverse()) == "s2 s1^-1 t^-1"
    assert (w + w.inverse()).strands == 3


def test_conjugate_and_stabilize():
    a = parse_braid("t s1")
    b = parse_braid("s1^-1")
    assert format_word(conjugate(a, b)) == "s1 t s1 s1^-1"
    m = markov_stabilize(a, -1)
    assert m.strands == 3 and m.letters[-1] == Letter(2, -1)
    with pytest.raises(ValueError):
        conjugate(a, parse_braid("s3"))


def test_skein_triple():
    w = parse_braid("t s1^-1 t")
    plus, minus, zero = skein_site_triple(w, 1)
    assert format_word(plus) == "t s1 t"
    assert format_word(minus) == "t s1^-1 t"
    assert format_word(zero) == "t t" and zero.strands == 2
    with pytest.raises(IndexError):
        skein_site_triple(w, 3)


def test_random_word_is_deterministic():
    assert random_word(7, 4, 10) == random_word(7, 4, 10)
    assert random_word(7, 4, 10, strands=3).strands == 3


def test_letter_validation():
    with pytest.raises(ValueError):
        Letter(1, 2)
    with pytest.raises(ValueError):
        BraidWord((Letter(3),), 2)
