import pytest
from hypothesis import given, settings

from bidend import hck, linalg
from bidend.core import LinComb, Tensor
from bidend.pairing import (ORACLE_MAX_VERTICES, OracleTooLargeError, format_table, gram,
                            ladder_identities, pair, pair_lc, pair_oracle, pair_tensor, table)
from bidend.pforest import DecorationSet, enumerate_forests, ladder, parse_forest
from strategies import ABC, SINGLE, forests


@pytest.mark.parametrize("f, g, value", [("*", "*", 1), ("* *", "* *", 2), ("* *", "*[*]", 1),
                                         ("*[*]", "*[*]", 1), ("a", "b", 0)])
def test_small_values(f, g, value):
    assert pair(parse_forest(f), parse_forest(g)) == value


@given(forests(max_weight=4), forests(max_weight=4))
def test_symmetric_and_bracketing_independent(f, g):
    v = pair(f, g)
    assert v == pair(g, f)
    assert v == pair(f, g, bracketing="last")
    if f.degree != g.degree:
        assert v == 0


@given(forests(ABC, max_weight=4), forests(ABC, max_weight=4))
@settings(max_examples=80)
def test_decorated_oracle(f, g):
    assert pair(f, g) == pair_oracle(f, g)


@given(forests(max_weight=3), forests(max_weight=3), forests(max_weight=5))
@settings(max_examples=60)
def test_product_is_adjoint_to_coproduct(f, g, h):
    lhs = pair_lc(LinComb.basis(f * g), LinComb.basis(h))
    rhs = pair_tensor(LinComb.basis(Tensor((f, g))), hck.coproduct(h))
    assert lhs == rhs


def test_oracle_size_guard():
    big = ladder(ORACLE_MAX_VERTICES + 1)
    with pytest.raises(OracleTooLargeError):
        pair_oracle(big, big)


@pytest.mark.parametrize("n", range(1, 6))
def test_gram_nonsingular(n):
    basis, m = gram(SINGLE, n)
    assert len(basis) == len(m)
    assert linalg.rank(m) == len(basis)


def test_gram_nonsingular_decorated():
    _, m = gram(DecorationSet.parse("a,b"), 3)
    assert linalg.det(m) != 0


def test_ladder_identities():
    f = parse_forest("*[*,*] *[*]")
    assert ladder_identities(f) == (1, 2, 3)


def test_table_format():
    fs = enumerate_forests(SINGLE, 2)
    assert format_table(fs, table(fs)) == "\t* *\t*[*]\n* *\t2\t1\n*[*]\t1\t1\n"
