import pytest
from hypothesis import given, settings

from bidend.core import LinComb, VerificationError
from bidend.halfprod import (DegreeBoundError, HalfProductTable, build_table, format_table,
                             shared_table, solve_prec, solve_succ)
from bidend.pforest import DecorationSet, Forest, b_plus, enumerate_forests, node, parse_forest
from strategies import ABC, SINGLE, forests


def test_smallest_products():
    one = parse_forest("*")
    assert str(solve_prec(one, one)) == "1**[*]"
    assert str(solve_succ(one, one)) == "1*(* *) + -1**[*]"


@pytest.mark.parametrize("label", ["a", "b"])
@pytest.mark.parametrize("x", enumerate_forests(ABC, 2))
def test_grafting(label, x):
    d = ABC[label]
    assert solve_prec(node(d), x, ABC) == LinComb.basis(Forest([b_plus(d, x)]))


@given(forests(ABC, max_weight=2), forests(ABC, max_weight=1))
@settings(max_examples=40, deadline=None)
def test_halves_sum_to_concatenation(f, g):
    assert solve_prec(f, g, ABC) + solve_succ(f, g, ABC) == LinComb.basis(f * g)


def test_degree_bound():
    table = HalfProductTable(SINGLE, 3)
    with pytest.raises(DegreeBoundError):
        table.prec(parse_forest("* *"), parse_forest("* *"))


def test_empty_forest_rejected():
    with pytest.raises(ValueError):
        shared_table(tuple(SINGLE), 5).prec(Forest(), parse_forest("*"))


def test_table_rendering():
    t = build_table(SINGLE, 2)
    assert format_table(t) == "*\t*\t1**[*]\t1*(* *) + -1**[*]\n"
    assert len(t.entries()) == 1


def test_shared_table_is_cached():
    assert shared_table(tuple(SINGLE), 4) is shared_table(tuple(SINGLE), 4)
