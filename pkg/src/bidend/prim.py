"""Primitive elements of bidendriform bialgebras.

Totally primitive vectors are computed two ways: as the joint kernel of the
half-coproducts in each degree, and as the image of the projection
T = T2∘T1 built from iterated half-products and half-coproducts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from . import fqsym, hck, linalg
from .core import LinComb, Tensor, VerificationError, ZERO, apply_on_factor, lc_sum, lc_tensor
from .halfprod import DEFAULT_MAX_DEGREE, shared_table
from .pairing import pair_lc
from .pforest import DecorationSet, enumerate_forests

Op2 = Callable[[LinComb, LinComb], LinComb]
Op1 = Callable[[LinComb], LinComb]


class PreconditionError(ValueError):
    """An operation was applied to an element outside its stated domain."""


@dataclass
class BidendAlgebraHandle:
    """Dispatch record for one bidendriform bialgebra on a graded basis."""

    name: str
    basis: Callable[[int], list]
    prec: Op2
    succ: Op2
    delta_pre: Op1
    delta_suc: Op1
    delta_tilde: Op1
    max_degree: int | None = None
    product: Op2 | None = None
    pairing: Callable[[LinComb, LinComb], Any] | None = None
    _basis_cache: dict = field(default_factory=dict, repr=False)

    def basis_of(self, n: int) -> list:
        if n not in self._basis_cache:
            self._basis_cache[n] = list(self.basis(n))
        return self._basis_cache[n]

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        if self.product is not None:
            return self.product(x, y)
        return self.prec(x, y) + self.succ(x, y)

    def check_splitting(self, max_n: int = 3) -> None:
        """m = ≺ + ≻ is by construction; Δ̃ = Δ≺ + Δ≻ is checked on bases."""
        for n in range(1, max_n + 1):
            for b in self.basis_of(n):
                x = LinComb.basis(b)
                if self.delta_tilde(x) != self.delta_pre(x) + self.delta_suc(x):
                    raise VerificationError(f"{self.name}: Δ̃ ≠ Δ≺ + Δ≻ on {b}", b)


def fqsym_handle() -> BidendAlgebraHandle:
    h = BidendAlgebraHandle("fqsym", fqsym.basis, fqsym.prec, fqsym.succ,
                            fqsym.delta_pre, fqsym.delta_suc, fqsym.reduced_coproduct,
                            product=fqsym.product, pairing=fqsym.dual_pairing)
    h.check_splitting()
    return h


def hck_handle(decorations: DecorationSet | None = None,
               max_degree: int = DEFAULT_MAX_DEGREE, primed: bool = False) -> BidendAlgebraHandle:
    """Decorated forests with half-products from the adjoint reconstruction.

    With ``primed`` the half-coproducts are Δ′≺, Δ′≻ (last tree totally cut
    or not), which do not form a bidendriform bialgebra with ≺, ≻.
    """
    decorations = decorations or DecorationSet.single()
    table = shared_table(tuple(decorations), max_degree)
    pre, suc = (hck.delta_pre_prime, hck.delta_suc_prime) if primed else (hck.delta_pre, hck.delta_suc)
    h = BidendAlgebraHandle("hck-prime" if primed else "hck",
                            lambda n: enumerate_forests(decorations, n),
                            table.prec_lc, table.succ_lc, pre, suc, hck.delta_tilde, max_degree,
                            product=hck.concat, pairing=pair_lc)
    h.check_splitting()
    return h


# ------------------------------------------------------------------ words

def omega(A: BidendAlgebraHandle, *elems: LinComb) -> LinComb:
    """ω(a_1..a_n) = a_n ≺ ω(a_1..a_{n-1})."""
    if not elems:
        raise ValueError("ω needs at least one argument")
    out = elems[0]
    for a in elems[1:]:
        out = A.prec(a, out)
    return out


def omega_prime(A: BidendAlgebraHandle, *elems: LinComb) -> LinComb:
    """ω′(a_1..a_n) = ω′(a_1..a_{n-1}) ≻ a_n."""
    if not elems:
        raise ValueError("ω′ needs at least one argument")
    out = elems[0]
    for a in elems[1:]:
        out = A.succ(out, a)
    return out


def _factors(key: Any) -> tuple:
    return tuple(key) if isinstance(key, Tensor) else (key,)


def m_pre_k(A: BidendAlgebraHandle, x: LinComb) -> LinComb:
    """m≺^k on k-fold tensors: m≺^{k-1}(a_2..a_k) ≺ a_1."""
    parts = []
    for key, c in x.items():
        fs = _factors(key)
        out = LinComb.basis(fs[-1])
        for a in reversed(fs[:-1]):
            out = A.prec(out, LinComb.basis(a))
        parts.append(out * c)
    return lc_sum(parts)


def m_suc_k(A: BidendAlgebraHandle, x: LinComb) -> LinComb:
    """m≻^k on k-fold tensors: a_1 ≻ m≻^{k-1}(a_2..a_k)."""
    parts = []
    for key, c in x.items():
        fs = _factors(key)
        out = LinComb.basis(fs[-1])
        for a in reversed(fs[:-1]):
            out = A.succ(LinComb.basis(a), out)
        parts.append(out * c)
    return lc_sum(parts)


def iter_first(A: BidendAlgebraHandle, x: LinComb, k: int) -> LinComb:
    """Δ≺^k: Δ≺ applied k times, always on the first factor."""
    for _ in range(k):
        if not x:
            break
        x = apply_on_factor(x, 0, lambda b: A.delta_pre(LinComb.basis(b)))
    return x


def iter_last(A: BidendAlgebraHandle, x: LinComb, k: int) -> LinComb:
    """Δ̃^k: Δ̃ applied k times, always on the last factor."""
    for i in range(k):
        if not x:
            break
        x = apply_on_factor(x, i, lambda b: A.delta_tilde(LinComb.basis(b)))
    return x


def _max_degree(x: LinComb) -> int:
    return max(x.degrees(), default=0)


def t1(A: BidendAlgebraHandle, x: LinComb) -> LinComb:
    """T1 = Σ_k (−1)^{k+1} m≺^k ∘ Δ≺^{k−1}; projects onto ker Δ≺."""
    parts = []
    cur = x
    for k in range(1, _max_degree(x) + 1):
        if not cur:
            break
        parts.append(m_pre_k(A, cur) * (1 if k % 2 else -1))
        cur = apply_on_factor(cur, 0, lambda b: A.delta_pre(LinComb.basis(b)))
    return lc_sum(parts)


def t2(A: BidendAlgebraHandle, x: LinComb) -> LinComb:
    """T2 = Σ_k (−1)^{k+1} m≻^k ∘ Δ̃^{k−1}, defined on ker Δ≺."""
    if A.delta_pre(x):
        raise PreconditionError("T2 is defined on elements annihilated by Δ≺")
    parts = []
    cur = x
    for k in range(1, _max_degree(x) + 1):
        if not cur:
            break
        parts.append(m_suc_k(A, cur) * (1 if k % 2 else -1))
        cur = apply_on_factor(cur, k - 1, lambda b: A.delta_tilde(LinComb.basis(b)))
    return lc_sum(parts)


def t_total(A: BidendAlgebraHandle, x: LinComb) -> LinComb:
    return t2(A, t1(A, x))


def omega_expansion_check(A: BidendAlgebraHandle, elems: Sequence[LinComb],
                          which: str = "omega") -> bool:
    """Iterated coproducts of ω (resp. ω′) of primitives recover the tensor of
    the arguments at depth n−1 and vanish at depth n."""
    n = len(elems)
    if n < 1:
        raise ValueError("need at least one element")
    if which == "omega":
        if A.delta_pre(elems[0]) or any(A.delta_tilde(e) for e in elems[1:]):
            raise PreconditionError("ω expansion needs a_1 ∈ ker Δ≺ and a_2..a_n ∈ ker Δ̃")
        word, it = omega(A, *elems), iter_first
    elif which == "omega_prime":
        if any(A.delta_tilde(e) for e in elems):
            raise PreconditionError("ω′ expansion needs every a_i ∈ ker Δ̃")
        word, it = omega_prime(A, *elems), iter_last
    else:
        raise ValueError(f"unknown word {which!r}")
    expected = elems[0]
    for e in elems[1:]:
        expected = lc_tensor(expected, e)
    return it(A, word, n - 1) == expected and it(A, word, n) == ZERO


# --------------------------------------------------- linear algebra views

@dataclass
class GradedSubspace:
    """Echelon basis of a subspace of the degree-n component."""

    degree: int
    basis_keys: list
    vectors: list[LinComb]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, x: LinComb) -> bool:
        idx = {k: i for i, k in enumerate(self.basis_keys)}
        rows = [to_sparse(v, idx) for v in self.vectors]
        return linalg.in_span(to_sparse(x, idx), rows, len(self.basis_keys))

    def same_span(self, other: "GradedSubspace") -> bool:
        return self.degree == other.degree and self.vectors == other.vectors


def to_sparse(x: LinComb, index: dict) -> dict:
    try:
        return {index[k]: c for k, c in x.items()}
    except KeyError as exc:
        raise ValueError(f"{exc.args[0]} is not in the degree basis") from None


def subspace(A: BidendAlgebraHandle, n: int, vectors: Iterable[LinComb]) -> GradedSubspace:
    """Canonical echelon form (pivot at the largest basis index, coefficient 1)."""
    keys = A.basis_of(n)
    idx = {k: i for i, k in enumerate(keys)}
    rows = linalg.echelon_last_pivot([to_sparse(v, idx) for v in vectors], len(keys))
    return GradedSubspace(n, keys, [LinComb((keys[i], c) for i, c in r.items()) for r in rows])


def _kernel(A: BidendAlgebraHandle, n: int, maps: Sequence[Op1]) -> GradedSubspace:
    keys = A.basis_of(n)
    rows: dict[Any, dict[int, Any]] = {}
    for j, b in enumerate(keys):
        x = LinComb.basis(b)
        for which, f in enumerate(maps):
            for t, c in f(x).items():
                rows.setdefault((which, t), {})[j] = c
    vecs = linalg.kernel(rows.values(), len(keys))
    return subspace(A, n, [LinComb((keys[i], c) for i, c in v.items()) for v in vecs])


def prim_tot_basis(A: BidendAlgebraHandle, n: int) -> GradedSubspace:
    """ker Δ≺ ∩ ker Δ≻ in degree n, by stacking both coproduct matrices."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    return _kernel(A, n, [A.delta_pre, A.delta_suc])


def prim_pre_basis(A: BidendAlgebraHandle, n: int) -> GradedSubspace:
    return _kernel(A, n, [A.delta_pre])


def prim_basis(A: BidendAlgebraHandle, n: int) -> GradedSubspace:
    return _kernel(A, n, [A.delta_tilde])


def t_image(A: BidendAlgebraHandle, n: int) -> GradedSubspace:
    return subspace(A, n, [t_total(A, LinComb.basis(b)) for b in A.basis_of(n)])


def d2_span(A: BidendAlgebraHandle, n: int) -> GradedSubspace:
    """A^{D2} in degree n: the span of all a ≺ b and a ≻ b."""
    vecs = []
    for i in range(1, n):
        for a in A.basis_of(i):
            for b in A.basis_of(n - i):
                x, y = LinComb.basis(a), LinComb.basis(b)
                vecs += [A.prec(x, y), A.succ(x, y)]
    return subspace(A, n, vecs)


def generated_span(A: BidendAlgebraHandle, n: int) -> GradedSubspace:
    """Degree-n part of the dendriform subalgebra generated by Prim_tot."""
    spans: dict[int, GradedSubspace] = {}
    for m in range(1, n + 1):
        vecs = list(prim_tot_basis(A, m).vectors)
        for i in range(1, m):
            for x in spans[i].vectors:
                for y in spans[m - i].vectors:
                    vecs += [A.prec(x, y), A.succ(x, y)]
        spans[m] = subspace(A, m, vecs)
    return spans[n]


def dims(A: BidendAlgebraHandle, max_n: int) -> list[int]:
    return [prim_tot_basis(A, n).dim for n in range(1, max_n + 1)]


__all__ = ["BidendAlgebraHandle", "GradedSubspace", "PreconditionError", "fqsym_handle",
           "hck_handle", "omega", "omega_prime", "m_pre_k", "m_suc_k", "iter_first", "iter_last",
           "t1", "t2", "t_total", "omega_expansion_check", "prim_tot_basis", "prim_pre_basis",
           "prim_basis", "t_image", "d2_span", "generated_span", "subspace", "dims"]
