from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bidend.core import (LinComb, LinCombSyntaxError, Tensor, ZERO, apply_on_factor, lc_bilinear,
                         lc_tensor, parse_lincomb)
from bidend.fqsym import Perm, parse_perm
from bidend.pforest import parse_forest

perms = st.permutations(range(1, 4)).map(Perm)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
lincombs = st.dictionaries(perms, coeffs, max_size=5).map(LinComb)


def test_zero_coefficients_dropped():
    x = LinComb({parse_perm("12"): 0, parse_perm("21"): 2})
    assert list(x) == [parse_perm("21")]
    assert x - x == ZERO
    assert not ZERO


@pytest.mark.parametrize("text, rendered", [
    ("0", "0"),
    ("12", "1*12"),
    ("2*21 - 12", "-1*12 + 2*21"),
    ("1/2*() + 3*1", "1/2*() + 3*1"),
])
def test_render_permutations(text, rendered):
    assert str(parse_lincomb(text, parse_perm)) == rendered


def test_keys_with_spaces_are_parenthesized():
    x = parse_lincomb("(a b) - a[b]", parse_forest)
    assert str(x) == "1*(a b) + -1*a[b]"
    assert parse_lincomb(str(x), parse_forest) == x


@pytest.mark.parametrize("bad", ["", "1/0*12"])
def test_syntax_errors(bad):
    with pytest.raises(LinCombSyntaxError):
        parse_lincomb(bad, parse_perm)


@pytest.mark.parametrize("bad", ["2*", "12 + x"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_lincomb(bad, parse_perm)


@given(lincombs)
def test_text_round_trip(x):
    assert parse_lincomb(str(x), parse_perm) == x


@given(lincombs, lincombs, coeffs)
def test_vector_space_laws(x, y, c):
    assert x + y == y + x
    assert (x + y) * c == x * c + y * c
    assert x + (-x) == ZERO


def test_tensor_rendering_and_flattening():
    a, b, c = (LinComb.basis(parse_perm(s)) for s in ("1", "12", "21"))
    t = lc_tensor(lc_tensor(a, b), c)
    (key,) = list(t)
    assert isinstance(key, Tensor) and len(key) == 3
    assert str(t) == "1*(1 # 12 # 21)"
    assert key.degree == 5


def test_apply_on_factor_is_linear():
    a, b = LinComb.basis(parse_perm("1")), LinComb.basis(parse_perm("12"))
    x = lc_tensor(a, b) * 3
    doubled = apply_on_factor(x, 1, lambda k: LinComb.basis(k) * 2)
    assert doubled == x * 2


def test_bilinear_extension():
    x = parse_lincomb("12 + 2*21", parse_perm)
    y = parse_lincomb("1", parse_perm)
    out = lc_bilinear(lambda u, v: LinComb({u: Fraction(len(v))}), x, y)
    assert out == x
