from math import comb

import pytest
from hypothesis import given

from bidend.pforest import (STAR, DecorationSet, Forest, ForestSyntaxError, UnknownDecorationError,
                            all_cuts, b_plus, enumerate_cuts, enumerate_forests, enumerate_trees,
                            ladder, node, parse_forest, rightmost_path, vertex_table, xi)
from bidend.series import Series, r_from_d
from strategies import ABC, SINGLE, forests


@pytest.mark.parametrize("text", ["*", "* *", "*[*]", "*[*,*[*]] *", "a b[c[e,d]]", "1"])
def test_round_trip(text):
    assert str(parse_forest(text)) == text


@given(forests(ABC, max_weight=4))
def test_round_trip_property(f):
    assert parse_forest(str(f), ABC) == f


@pytest.mark.parametrize("bad", ["*[", "*[]", "*[*,]", "a]", "[*]", "*,*"])
def test_syntax_errors(bad):
    with pytest.raises(ForestSyntaxError):
        parse_forest(bad)


def test_unknown_decoration():
    with pytest.raises(UnknownDecorationError):
        parse_forest("a[z]", ABC)


def test_weights_use_decoration_degrees():
    decs = DecorationSet.parse("x:2,y")
    f = parse_forest("x[y] y", decs)
    assert f.degree == 4
    counts = r_from_d(Series([0, 1, 1], 6)).integer_coeffs()[1:]
    assert [len(enumerate_forests(decs, n)) for n in range(1, 7)] == counts


@pytest.mark.parametrize("n", range(1, 8))
def test_forest_counts_are_catalan(n):
    assert len(enumerate_forests(SINGLE, n)) == comb(2 * n, n) // (n + 1)
    assert len(enumerate_trees(SINGLE, n)) == comb(2 * n - 2, n - 1) // n


def test_enumeration_is_sorted_and_distinct():
    fs = enumerate_forests(ABC, 3)
    assert len(set(fs)) == len(fs)
    assert len(fs) == 3 ** 3 * 5


def test_ladder_and_b_plus():
    assert str(ladder(3)) == "*[*[*]]"
    assert Forest([b_plus(STAR, ladder(2))]) == ladder(3)
    assert str(node(ABC["a"])) == "a"


@given(forests())
def test_cut_counts(f):
    cuts = list(all_cuts(f))
    assert len(cuts) == len(enumerate_cuts(f)) + 2
    for _, p, r in cuts:
        assert p.degree + r.degree == f.degree


def test_roots_leaves():
    f = parse_forest("*[*,*[*]] *")
    assert (f.roots(), f.leaves()) == (2, 3)


def test_rightmost_leaf_and_xi():
    a, b = ABC["a"], ABC["b"]
    f = parse_forest("a[b,c[a]]", ABC)
    assert rightmost_path(f) == (1, 0)
    assert str(xi(a, f)) == "1*a[b,c]"
    assert not xi(b, f)


def test_vertex_table_preorder():
    decs, parent, where = vertex_table(parse_forest("a[b,c] d"))
    assert [d.label for d in decs] == ["a", "b", "c", "d"]
    assert parent == [None, 0, 0, None]
    assert where[3] == (1, ())
