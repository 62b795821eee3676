from fractions import Fraction

import pytest

from hecketrace import coxeter as cx
from hecketrace.oracle import class_element, oracle_trace_table, specialize_qQ
from hecketrace.symbolic import Q, RatFun, q, sq, y, z
from hecketrace.trace import basis_trace


def test_level_one_table():
    table = oracle_trace_table(1, 2, 3)
    assert table[(1,)] == 1
    assert table[(-1,)] == y(1)


def test_level_two_matches_closed_form():
    qv, Qv = Fraction(3), Fraction(5, 2)
    table = oracle_trace_table(2, qv, Qv)
    tt1 = cx.from_word((0, 1, 0, 1), 2)
    expected = ((qv - 1) * (Qv - 1) * y(1) + (qv - 1) * Qv) * z + qv * y(2)
    assert table[tt1] == expected
    assert len(table) == 8


@pytest.mark.parametrize("point", [(Fraction(2), Fraction(3)), (Fraction(-1, 3), Fraction(7, 4))])
def test_agrees_with_evaluator_at_level_three(point):
    table = oracle_trace_table(3, *point)
    for w in cx.enumerate_group(3):
        assert specialize_qQ(basis_trace(w), *point) == table[w]


def test_specialize_only_touches_q_and_Q():
    f = (q * z + Q * y(2)) / (q + 1)
    assert specialize_qQ(f, 2, 3) == (2 * z + 3 * y(2)) / 3
    with pytest.raises(ValueError):
        specialize_qQ(sq, 2, 3)


def test_caps_and_degenerate_points():
    with pytest.raises(ValueError):
        oracle_trace_table(4, 2, 3)
    with pytest.raises(ValueError):
        oracle_trace_table(2, 0, 3)


def test_root_of_unity_point_still_solvable():
    # the class pins keep the system full rank even where the quadratic relation degenerates
    table = oracle_trace_table(2, -1, 2)
    for w in cx.enumerate_group(2):
        assert specialize_qQ(basis_trace(w), -1, 2) == table[w]


def test_class_element_is_primed_product():
    c = cx.ClassLabel((2,), ())
    h = class_element(c)
    assert h.level == 2
    top = max(h.terms, key=cx.length)
    assert top == cx.minimal_rep(c).perm()
    assert isinstance(h.coefficient(top), RatFun)
