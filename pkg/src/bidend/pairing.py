"""The bidendriform pairing on decorated forests.

Two independent routes compute ⟨F, G⟩:

* :func:`pair` recurses on the left argument using the empty forest,
  grafting (through ξ_d) and the full coproduct;
* :func:`pair_oracle` counts vertex bijections compatible with the
  height and left-to-right orders of both forests.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import linalg
from .core import LinComb, ZERO, lc_pair
from .hck import coproduct
from .pforest import (ONE, STAR, DecorationSet, Forest, enumerate_forests, ladder,
                      vertex_table, xi)

ORACLE_MAX_VERTICES = 9


class OracleTooLargeError(ValueError):
    """The bijection count was requested on forests above the vertex cap."""


def _compatible(f: Forest, g: Forest) -> bool:
    return f.degree == g.degree and f.decorations() == g.decorations()


@lru_cache(maxsize=None)
def _pair_first(f: Forest, g: Forest) -> int:
    """Recursion splitting a multi-tree left argument as (first tree)·(rest)."""
    if not f:
        return int(not g)
    if not _compatible(f, g):
        return 0
    if len(f.trees) == 1:
        t = f.trees[0]
        return int(sum(c * _pair_first(Forest(t.children), h) for h, c in xi(t.dec, g).items()))
    head, rest = Forest(f.trees[:1]), Forest(f.trees[1:])
    return _split_sum(head, rest, g, _pair_first)


@lru_cache(maxsize=None)
def _pair_last(f: Forest, g: Forest) -> int:
    """Same recursion, splitting as (all but the last tree)·(last tree)."""
    if not f:
        return int(not g)
    if not _compatible(f, g):
        return 0
    if len(f.trees) == 1:
        t = f.trees[0]
        return int(sum(c * _pair_last(Forest(t.children), h) for h, c in xi(t.dec, g).items()))
    init, last = Forest(f.trees[:-1]), Forest(f.trees[-1:])
    return _split_sum(init, last, g, _pair_last)


def _split_sum(a: Forest, b: Forest, g: Forest, rec: Callable[[Forest, Forest], int]) -> int:
    total = 0
    for (p, r), c in coproduct(g).items():
        if p.degree != a.degree:
            continue
        x = rec(a, p)
        if x:
            total += c * x * rec(b, r)
    return int(total)


def pair(f: Forest, g: Forest, bracketing: str = "first") -> int:
    """⟨F, G⟩ by the recursive algorithm.

    ``bracketing`` picks how a multi-tree F is split; both choices agree by
    coassociativity, and the test suite checks that they do.
    """
    if bracketing == "first":
        return _pair_first(f, g)
    if bracketing == "last":
        return _pair_last(f, g)
    raise ValueError(f"unknown bracketing {bracketing!r}")


def pair_lc(x: LinComb, y: LinComb) -> Fraction:
    """Bilinear extension of :func:`pair` to linear combinations of forests."""
    return lc_pair(_pair_first, x, y)


def pair_tensor(x: LinComb, y: LinComb) -> Fraction:
    """Pairing on tensor keys, factor by factor."""
    def on_keys(a, b) -> int:
        if len(a) != len(b):
            return 0
        out = 1
        for p, q in zip(a, b):
            out *= _pair_first(p, q)
            if not out:
                return 0
        return out
    return lc_pair(on_keys, x, y)


# ----------------------------------------------------------------- oracle

class VertexOrders:
    """≥_high and ≥_{d,l} on the vertices of a forest, indexed in preorder."""

    def __init__(self, forest: Forest):
        self.decorations, parent, self.where = vertex_table(forest)
        n = len(parent)
        self.size = n
        anc = [set() for _ in range(n)]
        for i in range(n):
            p = parent[i]
            while p is not None:
                anc[i].add(p)
                p = parent[p]
        # high[x][y]: there is a path from y up to x, i.e. x is y or a descendant of y
        self.high = [[x == y or y in anc[x] for y in range(n)] for x in range(n)]
        self.dl = [[self._dl(x, y) for y in range(n)] for x in range(n)]

    def left(self, x: int, y: int) -> bool:
        """x lies strictly to the left of y (the two being high-incomparable)."""
        if self.high[x][y] or self.high[y][x]:
            return False
        return self.where[x] < self.where[y]

    def _dl(self, x: int, y: int) -> bool:
        return x == y or self.left(x, y) or self.high[y][x]


def pair_oracle(f: Forest, g: Forest) -> int:
    """card I(F, G): decoration-preserving bijections f with
    x ≥_high y ⇒ f(x) ≥_dl f(y) and f(x) ≥_high f(y) ⇒ x ≥_dl y."""
    if f.weight != g.weight or f.degree != g.degree:
        return 0
    if Counter(f.decorations()) != Counter(g.decorations()):
        return 0
    if f.weight > ORACLE_MAX_VERTICES:
        raise OracleTooLargeError(
            f"bijection oracle is capped at {ORACLE_MAX_VERTICES} vertices, got {f.weight}")
    a, b = VertexOrders(f), VertexOrders(g)
    n = a.size
    image = [-1] * n
    used = [False] * n

    def ok(x: int, fx: int) -> bool:
        for y in range(x):
            fy = image[y]
            for u, v, fu, fv in ((x, y, fx, fy), (y, x, fy, fx)):
                if a.high[u][v] and not b.dl[fu][fv]:
                    return False
                if b.high[fu][fv] and not a.dl[u][v]:
                    return False
        return True

    def extend(x: int) -> int:
        if x == n:
            return 1
        count = 0
        for fx in range(n):
            if used[fx] or a.decorations[x] != b.decorations[fx] or not ok(x, fx):
                continue
            image[x], used[fx] = fx, True
            count += extend(x + 1)
            used[fx] = False
        image[x] = -1
        return count

    return extend(0)


# ------------------------------------------------------------------- Gram

def gram(decorations: DecorationSet, n: int,
         pairing: Callable[[Forest, Forest], int] = _pair_first) -> tuple[list[Forest], list[list[int]]]:
    """(basis, matrix) of the pairing in degree n, canonical basis order."""
    if n < 1:
        raise ValueError("gram needs n >= 1")
    basis = enumerate_forests(decorations, n)
    m = [[pairing(f, g) for g in basis] for f in basis]
    for i in range(len(basis)):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise AssertionError(f"pairing not symmetric on {basis[i]}, {basis[j]}")
    return basis, m


def gram_rank(decorations: DecorationSet, n: int) -> int:
    return linalg.rank(gram(decorations, n)[1])


def table(forests: Sequence[Forest], pairing: Callable[[Forest, Forest], int] = _pair_first
          ) -> list[list[int]]:
    return [[pairing(f, g) for g in forests] for f in forests]


def format_table(forests: Sequence[Forest], rows: Iterable[Sequence[int]]) -> str:
    """Tab-separated table with the basis as header row and first column."""
    names = [str(f) for f in forests]
    lines = ["\t".join([""] + names)]
    for name, row in zip(names, rows):
        lines.append("\t".join([name] + [str(v) for v in row]))
    return "\n".join(lines) + "\n"


def ladder_identities(f: Forest) -> tuple[int, int, int]:
    """(⟨F, l_n⟩, ⟨F, l_{n-1}·*⟩, ⟨F, *·l_{n-1}⟩) for F of weight n."""
    n = f.weight
    star = Forest(ladder(1).trees)
    return (_pair_first(f, ladder(n)),
            _pair_first(f, ladder(n - 1) * star),
            _pair_first(f, star * ladder(n - 1)))


__all__ = ["pair", "pair_lc", "pair_tensor", "pair_oracle", "VertexOrders", "gram", "gram_rank",
           "table", "format_table", "ladder", "ladder_identities", "OracleTooLargeError",
           "ORACLE_MAX_VERTICES", "ONE", "STAR", "ZERO"]
