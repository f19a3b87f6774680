"""Exact linear algebra over the rationals.

Dense routines take lists of rows.  Rank and determinant use Bareiss
fraction-free elimination on integer-scaled rows, so intermediate values
stay integral.  Kernels and echelon forms work on sparse rows
(``dict[col, Fraction]``) because the coproduct matrices are mostly zero.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


class SingularMatrixError(ArithmeticError):
    pass


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        m = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * m) for x in fr])
    return out


def bareiss(rows: Sequence[Sequence]) -> tuple[list[list[int]], int, int]:
    """Fraction-free forward elimination.

    Returns ``(echelon_rows, rank, sign)`` where ``sign`` tracks row swaps.
    Rows are scaled to integers first, which changes the determinant by a
    known factor; :func:`det` compensates.
    """
    a = _integer_rows(rows)
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    prev = 1
    r = 0
    sign = 1
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        pr = a[r]
        p = pr[c]
        for i in range(r + 1, n_rows):
            ri = a[i]
            f = ri[c]
            for j in range(c + 1, n_cols):
                ri[j] = (p * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        # rows above the pivot row are unchanged
        prev = p
        r += 1
    return a, r, sign


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return bareiss(rows)[1]


def det(rows: Sequence[Sequence]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    scale = Fraction(1)
    for r in rows:
        scale *= lcm(*(Fraction(x).denominator for x in r))
    a, rk, sign = bareiss(rows)
    if rk < n:
        return Fraction(0)
    return Fraction(sign * a[n - 1][n - 1]) / scale


def inverse(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Fraction."""
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise SingularMatrixError(f"matrix is singular (column {c})")
        a[c], a[piv] = a[piv], a[c]
        inv_p = 1 / a[c][c]
        a[c] = [x * inv_p for x in a[c]]
        pr = a[c]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
    return [r[n:] for r in a]


def mat_vec(m: Sequence[Sequence[Fraction]], v: Sequence) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in m]


SparseRow = dict  # column index -> Fraction


def _eliminate(rows: Iterable[SparseRow], col_order: Sequence[int]) -> dict[int, SparseRow]:
    """Reduced row echelon form of sparse rows.

    Pivot columns are chosen following ``col_order`` (earliest first).
    Returns pivot column -> normalized row.
    """
    position = {c: i for i, c in enumerate(col_order)}
    pivots: dict[int, SparseRow] = {}
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        # pivot rows are reduced, so one pass clears every pivot column
        for pc in [c for c in r if c in pivots]:
            f = r[pc]
            for c, v in pivots[pc].items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        if not r:
            continue
        pc = min(r, key=position.__getitem__)
        inv = 1 / r[pc]
        r = {c: v * inv for c, v in r.items()}
        # keep the form reduced: clear pc from earlier pivot rows
        for prow in pivots.values():
            f = prow.get(pc)
            if f:
                for c, v in r.items():
                    nv = prow.get(c, 0) - f * v
                    if nv:
                        prow[c] = nv
                    else:
                        prow.pop(c, None)
        pivots[pc] = r
    return pivots


def sparse_rank(rows: Iterable[SparseRow], n_cols: int) -> int:
    return len(_eliminate(rows, range(n_cols)))


def kernel(rows: Iterable[SparseRow], n_cols: int) -> list[SparseRow]:
    """Basis of {x : M x = 0} for a sparse matrix given by its rows."""
    piv = _eliminate(rows, range(n_cols))
    free = [c for c in range(n_cols) if c not in piv]
    basis = []
    for f in free:
        v = {f: Fraction(1)}
        for pc, row in piv.items():
            a = row.get(f)
            if a:
                v[pc] = -a
        basis.append(v)
    return basis


def echelon_last_pivot(vectors: Iterable[SparseRow], n_cols: int) -> list[SparseRow]:
    """Reduced echelon basis of span(vectors) with pivots at the largest index.

    Each returned vector has coefficient 1 at its pivot (its largest support
    index) and 0 at every other vector's pivot.  Vectors are sorted by pivot.
    """
    piv = _eliminate(vectors, list(range(n_cols - 1, -1, -1)))
    return [piv[c] for c in sorted(piv)]


def in_span(v: SparseRow, basis_rows: Iterable[SparseRow], n_cols: int) -> bool:
    rows = list(basis_rows)
    return sparse_rank(rows + [v], n_cols) == sparse_rank(rows, n_cols)
