"""Half-products ≺, ≻ on decorated forests, recovered as adjoints.

F ≺ G is the unique X of degree |F|+|G| with

    ⟨X, H⟩ = Σ ⟨F, P⟩⟨G, R⟩   over Δ≺(H) = Σ P ⊗ R

for every basis forest H; ≻ is the same with Δ≻.  The Gram matrix of the
pairing is invertible in each degree, so each product is one exact
matrix-vector multiply once the inverse for that degree is known.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from . import linalg
from .core import LinComb, VerificationError, ZERO, lc_bilinear
from .hck import delta_pre, delta_suc
from .pairing import gram, pair
from .pforest import DecorationSet, Forest, enumerate_forests

DEFAULT_MAX_DEGREE = 5


class DegreeBoundError(ValueError):
    """A half-product was requested above the table's degree bound."""


class HalfProductTable:
    """Lazily filled table of F ≺ G and F ≻ G for |F| + |G| ≤ max_degree."""

    def __init__(self, decorations: DecorationSet, max_degree: int = DEFAULT_MAX_DEGREE):
        self.decorations = decorations
        self.max_degree = max_degree
        self._basis: dict[int, list[Forest]] = {}
        self._inverse: dict[int, list[list]] = {}
        self._prec: dict[tuple[Forest, Forest], LinComb] = {}
        self._succ: dict[tuple[Forest, Forest], LinComb] = {}

    # one Gram factorization per degree, immutable once built
    def _solver(self, n: int) -> tuple[list[Forest], list[list]]:
        if n not in self._inverse:
            basis, m = gram(self.decorations, n)
            try:
                inv = linalg.inverse(m)
            except linalg.SingularMatrixError as exc:
                raise VerificationError(f"pairing is degenerate in degree {n}", n) from exc
            self._basis[n], self._inverse[n] = basis, inv
        return self._basis[n], self._inverse[n]

    def _solve(self, f: Forest, g: Forest, half: Callable[[Forest], LinComb]) -> LinComb:
        if not f or not g:
            raise ValueError("half-products are defined on nonempty forests")
        n = f.degree + g.degree
        if n > self.max_degree:
            raise DegreeBoundError(f"degree {n} exceeds the table bound {self.max_degree}")
        basis, inv = self._solver(n)
        rhs = []
        for h in basis:
            v = 0
            for (p, r), c in half(h).items():
                if p.degree == f.degree:
                    x = pair(f, p)
                    if x:
                        v += c * x * pair(g, r)
            rhs.append(v)
        coeffs = linalg.mat_vec(inv, rhs)
        return LinComb((h, c) for h, c in zip(basis, coeffs) if c)

    def prec(self, f: Forest, g: Forest) -> LinComb:
        key = (f, g)
        if key not in self._prec:
            self._prec[key] = self._solve(f, g, delta_pre)
        return self._prec[key]

    def succ(self, f: Forest, g: Forest) -> LinComb:
        key = (f, g)
        if key not in self._succ:
            self._succ[key] = self._solve(f, g, delta_suc)
        return self._succ[key]

    def prec_lc(self, x: LinComb, y: LinComb) -> LinComb:
        return lc_bilinear(self.prec, x, y)

    def succ_lc(self, x: LinComb, y: LinComb) -> LinComb:
        return lc_bilinear(self.succ, x, y)

    def pairs(self) -> Iterator[tuple[Forest, Forest]]:
        """All (F, G) of positive degrees with |F| + |G| ≤ max_degree."""
        for n in range(2, self.max_degree + 1):
            for i in range(1, n):
                for f in enumerate_forests(self.decorations, i):
                    for g in enumerate_forests(self.decorations, n - i):
                        yield f, g

    def fill(self) -> "HalfProductTable":
        for f, g in self.pairs():
            self.prec(f, g)
            self.succ(f, g)
        return self

    def entries(self) -> list[tuple[Forest, Forest, LinComb, LinComb]]:
        return [(f, g, self.prec(f, g), self.succ(f, g)) for f, g in self.pairs()]


def solve_prec(f: Forest, g: Forest, decorations: DecorationSet | None = None) -> LinComb:
    return _table_for(decorations, f.degree + g.degree).prec(f, g)


def solve_succ(f: Forest, g: Forest, decorations: DecorationSet | None = None) -> LinComb:
    return _table_for(decorations, f.degree + g.degree).succ(f, g)


def _table_for(decorations: DecorationSet | None, n: int) -> HalfProductTable:
    if decorations is None:
        decorations = DecorationSet.single()
    return shared_table(tuple(decorations), max(n, DEFAULT_MAX_DEGREE))


@lru_cache(maxsize=None)
def shared_table(decorations: tuple, max_degree: int = DEFAULT_MAX_DEGREE) -> HalfProductTable:
    """Process-wide table per (decoration tuple, bound), so Gram inverses are reused."""
    return HalfProductTable(DecorationSet(decorations), max_degree)


def build_table(decorations: DecorationSet, max_degree: int = DEFAULT_MAX_DEGREE) -> HalfProductTable:
    """Fully populated table; the bound defaults to 5 (degree 6 is opt-in)."""
    return shared_table(tuple(decorations), max_degree).fill()


def format_table(table: HalfProductTable) -> str:
    lines = []
    for f, g, p, s in table.entries():
        lines.append(f"{f}\t{g}\t{p}\t{s}")
    return "\n".join(lines) + ("\n" if lines else "")


__all__ = ["HalfProductTable", "DegreeBoundError", "solve_prec", "solve_succ", "build_table",
           "shared_table", "format_table", "DEFAULT_MAX_DEGREE", "ZERO"]
