"""The isomorphism Ψ from decorated forests to FQSym.

Decorations of degree n are indexed by a basis of the totally primitive
elements of FQSym in degree n.  Ψ sends a one-vertex tree to its
primitive, a grafting B⁺_d(G) to p_d ≺ Ψ(G), and a forest to the product of
the images of its trees.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import factorial
from typing import Any

from . import fqsym, hck, linalg
from .core import LinComb, Tensor, VerificationError, lc_sum
from .halfprod import shared_table
from .pforest import Decoration, DecorationSet, Forest, Tree, UnknownDecorationError, enumerate_forests
from .prim import fqsym_handle, prim_tot_basis
from .series import Series, r_from_d

DEFAULT_MAX = 5


@dataclass(frozen=True)
class IsoData:
    decorations: DecorationSet
    primitives: dict  # Decoration -> LinComb over permutations


_CACHE: dict[int, IsoData] = {}


def build_decorations(n_max: int = DEFAULT_MAX) -> IsoData:
    """Labels ``p<n>_<i>`` assigned in order to the echelon basis of Prim_tot(FQSym)_n."""
    if n_max not in _CACHE:
        A = fqsym_handle()
        bases = [prim_tot_basis(A, n).vectors for n in range(1, n_max + 1)]
        decs = DecorationSet.from_profile([len(b) for b in bases])
        prims = {}
        for n, vecs in enumerate(bases, start=1):
            for d, v in zip(decs.of_degree(n), vecs):
                prims[d] = v
        _CACHE[n_max] = IsoData(decs, prims)
    return _CACHE[n_max]


class Psi:
    """Ψ for a fixed family of primitives, memoized on trees and forests."""

    def __init__(self, data: IsoData):
        self.data = data
        self._trees: dict[Tree, LinComb] = {}
        self._forests: dict[Forest, LinComb] = {}

    def tree(self, t: Tree) -> LinComb:
        if t not in self._trees:
            try:
                p = self.data.primitives[t.dec]
            except KeyError:
                raise UnknownDecorationError(f"no primitive assigned to {t.dec.label!r}") from None
            self._trees[t] = fqsym.prec(p, self(Forest(t.children))) if t.children else p
        return self._trees[t]

    def __call__(self, f: Forest) -> LinComb:
        if f not in self._forests:
            out = LinComb.basis(fqsym.EMPTY)
            for t in f.trees:
                out = fqsym.product(out, self.tree(t))
            self._forests[f] = out
        return self._forests[f]

    def lc(self, x: LinComb) -> LinComb:
        return lc_sum(self(k) * c for k, c in x.items())

    def tensor(self, x: LinComb) -> LinComb:
        """Ψ⊗Ψ on 2-fold tensor keys of forests."""
        parts = []
        for (a, b), c in x.items():
            pa, pb = self(a), self(b)
            parts.append(LinComb({Tensor((u, v)): c * cu * cv
                                  for u, cu in pa.items() for v, cv in pb.items()}))
        return lc_sum(parts)


def psi(f: Forest, n_max: int = DEFAULT_MAX) -> LinComb:
    return _psi_for(n_max)(f)


_PSI: dict[int, Psi] = {}


def _psi_for(n_max: int) -> Psi:
    if n_max not in _PSI:
        _PSI[n_max] = Psi(build_decorations(n_max))
    return _PSI[n_max]


@dataclass
class DegreeRow:
    degree: int
    forests: int
    expected: int
    rank: int
    series: int

    @property
    def ok(self) -> bool:
        return self.forests == self.expected == self.rank == self.series


@dataclass
class IsoReport:
    max_degree: int
    profile: list[int]
    rows: list[DegreeRow] = field(default_factory=list)
    intertwining_checked: int = 0
    half_products_checked: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows) and not self.failures

    def to_dict(self) -> dict:
        d = asdict(self)
        for r, row in zip(d["rows"], self.rows):
            r["ok"] = row.ok
        d["ok"] = self.ok
        return d

    def format(self) -> str:
        lines = [f"profile {','.join(map(str, self.profile))}"]
        for r in self.rows:
            lines.append(f"degree {r.degree}: forests {r.forests} rank {r.rank} "
                         f"n! {r.expected} series {r.series} {'ok' if r.ok else 'FAIL'}")
        lines.append(f"coproduct intertwining: {self.intertwining_checked} forests")
        lines.append(f"half-product intertwining: {self.half_products_checked} pairs")
        for f in self.failures:
            lines.append(f"FAIL {f['check']} on {f['witness']}")
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines)


def _rank(images: list[LinComb], n: int) -> int:
    index = {p: i for i, p in enumerate(fqsym.basis(n))}
    rows = [{index[k]: c for k, c in x.items()} for x in images]
    return linalg.sparse_rank(rows, len(index))


def verify_iso(n_max: int = DEFAULT_MAX, morphism_degree: int = 4,
               half_product_degree: int = 4) -> IsoReport:
    """Counts, ranks and morphism checks for Ψ up to degree ``n_max``.

    Coproduct intertwining (Ψ⊗Ψ)∘Δ_x = Δ_x∘Ψ is checked on every forest of
    degree ≤ ``morphism_degree``; Ψ(F ≺ G) = Ψ(F) ≺ Ψ(G) and the ≻ analogue
    on every pair of total degree ≤ ``half_product_degree``, using the
    half-products recovered from the pairing on decorated forests.
    """
    data = build_decorations(n_max)
    ps = _psi_for(n_max)
    decs = data.decorations
    profile = decs.profile(n_max)
    counts = r_from_d(Series([0, *profile], n_max))
    report = IsoReport(n_max, profile)
    for n in range(1, n_max + 1):
        forests = enumerate_forests(decs, n)
        rk = _rank([ps(f) for f in forests], n)
        report.rows.append(DegreeRow(n, len(forests), factorial(n), rk, int(counts[n])))
    for n in range(1, min(morphism_degree, n_max) + 1):
        for f in enumerate_forests(decs, n):
            image = ps(f)
            for name, forest_op, perm_op in (("Δ≺", hck.delta_pre, fqsym.delta_pre),
                                             ("Δ≻", hck.delta_suc, fqsym.delta_suc)):
                if ps.tensor(forest_op(f)) != perm_op(image):
                    report.failures.append({"check": name, "witness": str(f)})
            report.intertwining_checked += 1
    table = shared_table(tuple(decs), max(half_product_degree, 2))
    for n in range(2, min(half_product_degree, n_max) + 1):
        for i in range(1, n):
            for f in enumerate_forests(decs, i):
                for g in enumerate_forests(decs, n - i):
                    for name, forest_op, perm_op in (("≺", table.prec, fqsym.prec),
                                                     ("≻", table.succ, fqsym.succ)):
                        if ps.lc(forest_op(f, g)) != perm_op(ps(f), ps(g)):
                            report.failures.append({"check": name, "witness": f"{f} | {g}"})
                    report.half_products_checked += 1
    return report


def require_iso(n_max: int = DEFAULT_MAX) -> IsoReport:
    report = verify_iso(n_max)
    if not report.ok:
        raise VerificationError("Ψ failed verification", report.failures or report.rows)
    return report


__all__ = ["IsoData", "Psi", "build_decorations", "psi", "verify_iso", "require_iso",
           "IsoReport", "DegreeRow", "Decoration"]
