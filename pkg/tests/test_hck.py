import pytest
from hypothesis import given

from bidend import hck
from bidend.core import LinComb, Tensor, ZERO, apply_on_factor, lc_sum
from bidend.pforest import ONE, Forest, enumerate_forests, parse_forest
from strategies import ABC, SINGLE, forests


def test_single_vertex_is_primitive():
    d = parse_forest("d")
    assert hck.reduced_coproduct(d) == ZERO
    assert hck.delta_pre(d) == hck.delta_suc(d) == ZERO


def test_two_vertex_examples():
    assert str(hck.delta_pre(parse_forest("a[b]"))) == "1*(b # a)"
    assert str(hck.delta_suc(parse_forest("a b"))) == "1*(a # b)"
    assert str(hck.delta_pre(parse_forest("a b"))) == "1*(b # a)"


@given(forests(ABC, max_weight=5))
def test_half_coproduct_algorithms_agree(f):
    assert hck.delta_halves_recursive(f, "first")[0] == hck.delta_pre_cuts(f)
    assert hck.delta_halves_recursive(f, "last")[0] == hck.delta_pre_cuts(f)
    assert hck.delta_pre(f) + hck.delta_suc(f) == hck.reduced_coproduct(f)


@given(forests(max_weight=6))
def test_coassociativity(f):
    x = LinComb.basis(f)
    lhs = apply_on_factor(apply_on_factor(x, 0, hck.coproduct), 0, hck.coproduct)
    rhs = apply_on_factor(apply_on_factor(x, 0, hck.coproduct), 1, hck.coproduct)
    assert lhs == rhs


@given(forests(ABC, max_weight=3), forests(ABC, max_weight=3))
def test_coproduct_is_multiplicative(f, g):
    got = hck.coproduct(f * g)
    want = lc_sum(LinComb.basis(Tensor((a * c, b * d))) * (x * y)
                  for (a, b), x in hck.coproduct(f).items()
                  for (c, d), y in hck.coproduct(g).items())
    assert got == want


@given(forests(max_weight=5))
def test_counit(f):
    x = LinComb.basis(f)
    left = lc_sum(LinComb.basis(b) * (c * hck.counit(LinComb.basis(a)))
                  for (a, b), c in hck.coproduct(f).items())
    assert left == x


@pytest.mark.parametrize("f", enumerate_forests(SINGLE, 4))
def test_antipode_both_recursions(f):
    assert hck.antipode(f) == hck.antipode_right(f)
    assert hck.antipode_identity(f) == ZERO


def test_antipode_of_unit():
    assert hck.antipode_identity(ONE) == LinComb.basis(ONE)


def test_primed_half_coproducts():
    t = parse_forest("a[b,c]")
    assert hck.delta_pre_prime(t) == ZERO
    assert hck.delta_suc_prime(t) == hck.reduced_coproduct(t)
    f = parse_forest("a b")
    assert str(hck.delta_pre_prime(f)) == "1*(b # a)"


def test_iterates():
    f = LinComb.basis(parse_forest("a b c"))
    assert hck.iter_delta_pre(f, 0) == f
    assert hck.iter_delta_pre(f, 1) == hck.delta_pre(f)
    twice = hck.iter_delta_pre(f, 2)
    assert twice == apply_on_factor(hck.delta_pre(f), 0, hck.delta_pre)
    assert all(len(k) == 3 and k.degree == 3 for k in twice)
    assert hck.iter_delta_pre(f, 3) == ZERO
    assert hck.iter_delta_tilde(f, 2) == apply_on_factor(hck.delta_tilde(f), 1, hck.delta_tilde)


def test_empty_forest_rejected():
    with pytest.raises(hck.EmptyForestError):
        hck.delta_pre(ONE)
