from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bidend import linalg

small = st.integers(-4, 4)


def matrices(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


@pytest.mark.parametrize("m, d", [
    ([[1]], 1),
    ([[2, 1], [1, 1]], 1),
    ([[0, 1], [1, 0]], -1),
    ([[1, 2], [2, 4]], 0),
    ([[2, 0, 0], [0, 3, 0], [0, 0, 5]], 30),
])
def test_det(m, d):
    assert linalg.det(m) == d


@given(st.integers(1, 4).flatmap(matrices))
@settings(max_examples=60)
def test_inverse_or_singular(m):
    n = len(m)
    if linalg.det(m) == 0:
        with pytest.raises(linalg.SingularMatrixError):
            linalg.inverse(m)
        assert linalg.rank(m) < n
        return
    inv = linalg.inverse(m)
    prod = [[sum(Fraction(m[i][k]) * inv[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
    assert prod == [[int(i == j) for j in range(n)] for i in range(n)]


@given(st.integers(1, 5).flatmap(lambda c: st.lists(
    st.lists(small, min_size=c, max_size=c), min_size=1, max_size=5)))
@settings(max_examples=60)
def test_rank_nullity(rows):
    n = len(rows[0])
    sparse = [{j: v for j, v in enumerate(r) if v} for r in rows]
    ker = linalg.kernel(sparse, n)
    assert linalg.sparse_rank(sparse, n) + len(ker) == n
    assert linalg.sparse_rank(sparse, n) == linalg.rank(rows)
    for v in ker:
        for r in rows:
            assert sum(r[j] * c for j, c in v.items()) == 0


def test_echelon_pivots_at_last_index():
    rows = linalg.echelon_last_pivot([{0: 1, 2: 1}, {1: 2}, {0: 2, 1: 2, 2: 2}], 3)
    assert [max(r) for r in rows] == [1, 2]
    assert all(r[max(r)] == 1 for r in rows)
    assert linalg.in_span({0: 3, 1: 1, 2: 3}, rows, 3)
    assert not linalg.in_span({0: 1}, rows, 3)
