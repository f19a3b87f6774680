import pytest
from hypothesis import given, settings

from bidend import fqsym, prim
from bidend.core import LinComb, ZERO, lc_tensor
from bidend.fqsym import F
from bidend.pforest import DecorationSet
from strategies import perms

A = prim.fqsym_handle()
V1 = F("1")
V231 = F("231") - F("132")


def test_kernel_dimensions():
    assert prim.dims(A, 5) == [1, 0, 1, 6, 39]


def test_degree_three_basis():
    (v,) = prim.prim_tot_basis(A, 3).vectors
    assert v == V231


def test_forest_side_has_only_single_vertices():
    H = prim.hck_handle(DecorationSet.single(), 5)
    assert prim.dims(H, 5) == [1, 0, 0, 0, 0]


@given(perms(max_n=4))
@settings(max_examples=60)
def test_projection_lands_in_kernel(u):
    t = prim.t_total(A, LinComb.basis(u))
    assert A.delta_pre(t) == ZERO and A.delta_suc(t) == ZERO
    t1 = prim.t1(A, LinComb.basis(u))
    assert A.delta_pre(t1) == ZERO


def test_t2_precondition():
    with pytest.raises(prim.PreconditionError):
        prim.t2(A, F("21"))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_image_equals_kernel(n):
    assert prim.t_image(A, n).same_span(prim.prim_tot_basis(A, n))


@pytest.mark.parametrize("n, dim", [(1, 1), (2, 2), (3, 6), (4, 24)])
def test_primitives_generate(n, dim):
    assert prim.generated_span(A, n).dim == dim


@pytest.mark.parametrize("elems", [(V1, V1), (V1, V231), (V231, V1, V1)])
def test_omega_expansion(elems):
    assert prim.omega_expansion_check(A, elems, "omega")
    assert prim.omega_expansion_check(A, elems, "omega_prime")


def test_omega_precondition():
    with pytest.raises(prim.PreconditionError):
        prim.omega_expansion_check(A, (V1, F("21")), "omega")


def test_omega_words():
    assert prim.omega(A, V1, V1) == fqsym.prec(V1, V1)
    assert prim.omega_prime(A, V1, V1) == fqsym.succ(V1, V1)
    assert prim.iter_first(A, prim.omega(A, V1, V1), 1) == lc_tensor(V1, V1)


def test_subspace_echelon_form():
    s = prim.subspace(A, 2, [F("12") + F("21"), F("21") * 2])
    assert [str(v) for v in s.vectors] == ["1*12", "1*21"]
    assert s.contains(F("12") - F("21"))
