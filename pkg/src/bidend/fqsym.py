"""Free quasi-symmetric functions on the fundamental basis F_u."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .core import LinComb, Tensor, ZERO, lc_apply, lc_bilinear, lc_pair


class Perm(tuple):
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int] = ()) -> "Perm":
        p = super().__new__(cls, (int(x) for x in word))
        if sorted(p) != list(range(1, len(p) + 1)):
            raise ValueError(f"{tuple(p)} is not a permutation of 1..{len(p)}")
        return p

    @classmethod
    def _trusted(cls, word: Iterable[int]) -> "Perm":
        return tuple.__new__(cls, word)

    @property
    def degree(self) -> int:
        return len(self)

    def sort_key(self) -> tuple:
        return (len(self), tuple(self))

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, v in enumerate(self, start=1):
            inv[v - 1] = i
        return Perm._trusted(inv)

    def __str__(self) -> str:
        if not self:
            return "()"
        if len(self) <= 9:
            return "".join(map(str, self))
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return f"Perm({str(self)!r})"


EMPTY = Perm(())


def parse_perm(text: str) -> Perm:
    """``2431``, ``[10,2,...]`` for long permutations, ``()`` for the unit."""
    text = text.strip()
    if text in ("()", "[]"):
        return EMPTY
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"malformed permutation {text!r}")
        return Perm(int(x) for x in text[1:-1].split(",") if x.strip())
    if not text.isdigit():
        raise ValueError(f"malformed permutation {text!r}")
    return Perm(int(c) for c in text)


def F(word: str | Sequence[int]) -> LinComb:
    """Basis element F_u."""
    return LinComb.basis(parse_perm(word) if isinstance(word, str) else Perm(word))


def standardize(word: Sequence[int]) -> Perm:
    if len(set(word)) != len(word):
        raise ValueError(f"standardization needs distinct letters, got {tuple(word)}")
    order = sorted(range(len(word)), key=word.__getitem__)
    out = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return Perm._trusted(out)


def all_perms(n: int) -> list[Perm]:
    return [Perm._trusted(p) for p in permutations(range(1, n + 1))]


# ---------------------------------------------------------------- products

def _shuffles(u: Perm, v: Perm) -> list[tuple[Perm, bool]]:
    """All shuffles of u with v shifted by n; flag = last letter from u.

    Shuffles are indexed by the position set of u's letters, lexicographically.
    """
    n, m = len(u), len(v)
    shifted = [x + n for x in v]
    out = []
    for pos in combinations(range(n + m), n):
        word = [0] * (n + m)
        ps = set(pos)
        iu = iter(u)
        iv = iter(shifted)
        for i in range(n + m):
            word[i] = next(iu) if i in ps else next(iv)
        out.append((Perm._trusted(word), (n + m - 1) in ps))
    return out


@lru_cache(maxsize=None)
def _product(u: Perm, v: Perm) -> LinComb:
    return LinComb((w, 1) for w, _ in _shuffles(u, v))


@lru_cache(maxsize=None)
def _prec(u: Perm, v: Perm) -> LinComb:
    if not u or not v:
        raise ValueError("half-products are defined on nonempty permutations")
    return LinComb((w, 1) for w, last_left in _shuffles(u, v) if last_left)


@lru_cache(maxsize=None)
def _succ(u: Perm, v: Perm) -> LinComb:
    if not u or not v:
        raise ValueError("half-products are defined on nonempty permutations")
    return LinComb((w, 1) for w, last_left in _shuffles(u, v) if not last_left)


def product(x: LinComb, y: LinComb) -> LinComb:
    return lc_bilinear(_product, x, y)


def prec(x: LinComb, y: LinComb) -> LinComb:
    """Left half-product: shuffles whose last letter comes from the left factor."""
    return lc_bilinear(_prec, x, y)


def succ(x: LinComb, y: LinComb) -> LinComb:
    return lc_bilinear(_succ, x, y)


# -------------------------------------------------------------- coproducts

def _cut(u: Perm, i: int) -> Tensor:
    return Tensor((standardize(u[:i]), standardize(u[i:])))


@lru_cache(maxsize=None)
def _coproduct(u: Perm) -> LinComb:
    return LinComb((_cut(u, i), 1) for i in range(len(u) + 1))


@lru_cache(maxsize=None)
def _reduced(u: Perm) -> LinComb:
    return LinComb((_cut(u, i), 1) for i in range(1, len(u)))


def _max_position(u: Perm) -> int:
    if not u:
        raise ValueError("half-coproducts are defined on nonempty permutations")
    return u.index(len(u)) + 1


@lru_cache(maxsize=None)
def _delta_pre(u: Perm) -> LinComb:
    return LinComb((_cut(u, i), 1) for i in range(_max_position(u), len(u)))


@lru_cache(maxsize=None)
def _delta_suc(u: Perm) -> LinComb:
    return LinComb((_cut(u, i), 1) for i in range(1, _max_position(u)))


def coproduct(x: LinComb) -> LinComb:
    return lc_apply(_coproduct, x)


def reduced_coproduct(x: LinComb) -> LinComb:
    return lc_apply(_reduced, x)


def delta_pre(x: LinComb) -> LinComb:
    """Δ≺: cut points at or after the position of the largest letter."""
    return lc_apply(_delta_pre, x)


def delta_suc(x: LinComb) -> LinComb:
    return lc_apply(_delta_suc, x)


# ------------------------------------------------------------------ pairing

def _dual(u: Perm, v: Perm) -> int:
    return int(len(u) == len(v) and v == u.inverse())


def dual_pairing(x: LinComb, y: LinComb):
    """⟨F_u, F_v⟩ = 1 iff v = u⁻¹."""
    return lc_pair(_dual, x, y)


def tensor_pairing(x: LinComb, y: LinComb):
    """The pairing extended factorwise to tensor keys."""
    def on_keys(a: Tensor, b: Tensor) -> int:
        if len(a) != len(b):
            return 0
        out = 1
        for p, q in zip(a, b):
            out *= _dual(p, q)
            if not out:
                return 0
        return out
    return lc_pair(on_keys, x, y)


def basis(n: int) -> list[Perm]:
    """Degree-n basis in canonical (lexicographic) order."""
    return sorted(all_perms(n), key=Perm.sort_key)


__all__ = ["Perm", "EMPTY", "F", "parse_perm", "standardize", "product", "prec", "succ",
           "coproduct", "reduced_coproduct", "delta_pre", "delta_suc", "dual_pairing",
           "tensor_pairing", "basis", "all_perms", "ZERO"]
