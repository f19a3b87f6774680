"""Hopf and bidendriform coalgebra structure on decorated planar forests.

Coproducts return :class:`LinComb` values over 2-factor :class:`Tensor` keys
of forests.  The full coproduct and the antipode live in the unital algebra
(the empty forest ``ONE`` may appear); the half-coproducts act on the
augmentation ideal and never produce ``ONE``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any

from .core import LinComb, Tensor, ZERO, apply_on_factor, lc_apply, lc_bilinear, lc_scale, lc_sum
from .pforest import (EMPTY_CUT, ONE, TOTAL_CUT, Forest, Tree, all_cuts, as_forest,
                      enumerate_cuts, parse_forest, rightmost_path)


class EmptyForestError(ValueError):
    """A half-coproduct was asked for on the unit forest."""


def _require_nonempty(f: Forest) -> None:
    if not f:
        raise EmptyForestError("operation is defined on nonempty forests only")


def _t(a: Forest, b: Forest) -> Tensor:
    return Tensor((a, b))


def _lc(pairs) -> LinComb:
    return LinComb((_t(p, r), 1) for p, r in pairs)


# ----------------------------------------------------------------- product

def concat(x: LinComb, y: LinComb) -> LinComb:
    return lc_bilinear(lambda a, b: LinComb.basis(a * b), x, y)


def basis(f: Forest | str) -> LinComb:
    return LinComb.basis(parse_forest(f) if isinstance(f, str) else as_forest(f))


def counit(x: LinComb) -> Any:
    return x.coeff(ONE)


# --------------------------------------------------------------- coproducts

@lru_cache(maxsize=None)
def coproduct(f: Forest) -> LinComb:
    """Δ(F) over Adm_*(F), including F⊗1 and 1⊗F."""
    return _lc((p, r) for _, p, r in all_cuts(f))


@lru_cache(maxsize=None)
def reduced_coproduct(f: Forest) -> LinComb:
    return _lc((p, r) for _, p, r in enumerate_cuts(f))


def _is_pre_cut(cut, f: Forest, path: tuple[int, ...]) -> bool:
    last = cut.parts[-1]
    if last == TOTAL_CUT:
        return len(f.trees) > 1
    if last == EMPTY_CUT:
        return False
    return any(e == path[:len(e)] for e in last)


@lru_cache(maxsize=None)
def delta_pre_cuts(f: Forest) -> LinComb:
    """Δ≺ by filtering admissible cuts (geometric description)."""
    _require_nonempty(f)
    path = rightmost_path(f)
    return _lc((p, r) for c, p, r in enumerate_cuts(f) if _is_pre_cut(c, f, path))


@lru_cache(maxsize=None)
def delta_halves_recursive(f: Forest, split: str = "first") -> tuple[LinComb, LinComb]:
    """(Δ≺(F), Δ≻(F)) computed without cuts.

    Trees use Δ≺(B⁺_d(G)) = G'≺ ⊗ B⁺_d(G''≺) + G ⊗ •_d and
    Δ≻(B⁺_d(G)) = G'≻ ⊗ B⁺_d(G''≻); forests are split into two nonempty
    factors (``split`` = ``"first"`` tree or ``"last"`` tree) and combined
    through the compatibilities with concatenation.
    """
    _require_nonempty(f)
    if len(f.trees) > 1:
        if split == "first":
            t0, rest = Forest(f.trees[:1]), Forest(f.trees[1:])
        else:
            t0, rest = Forest(f.trees[:-1]), Forest(f.trees[-1:])
        return _product_halves_split(t0, rest, split)
    t = f.trees[0]
    d = t.dec
    g = Forest(t.children)
    if not g:
        return ZERO, ZERO
    g_pre, g_suc = delta_halves_recursive(g, split)

    def graft(u: LinComb) -> LinComb:
        return LinComb({_t(k[0], Forest((Tree(d, k[1].trees),))): c for k, c in u.items()})

    pre = graft(g_pre) + LinComb({_t(g, Forest((Tree(d),))): 1})
    suc = graft(g_suc)
    return pre, suc


def _product_halves_split(a: Forest, b: Forest, split: str) -> tuple[LinComb, LinComb]:
    a_pre, a_suc = delta_halves_recursive(a, split)
    b_pre, b_suc = delta_halves_recursive(b, split)
    a_red = a_pre + a_suc

    def mix(x: LinComb, y: LinComb) -> list[LinComb]:
        return [LinComb({_t(kx[0] * ky[0], kx[1] * ky[1]): cx * cy})
                for kx, cx in x.items() for ky, cy in y.items()]

    def on(u: LinComb, fn) -> LinComb:
        return LinComb((fn(k), c) for k, c in u.items())

    pre = lc_sum(mix(a_red, b_pre) + [
        on(a_red, lambda k: _t(k[0] * b, k[1])),      # a'b ⊗ a''
        on(b_pre, lambda k: _t(a * k[0], k[1])),      # ab'≺ ⊗ b''≺
        on(b_pre, lambda k: _t(k[0], a * k[1])),      # b'≺ ⊗ ab''≺
        LinComb({_t(b, a): 1}),                       # b ⊗ a
    ])
    suc = lc_sum(mix(a_red, b_suc) + [
        on(a_red, lambda k: _t(k[0], k[1] * b)),      # a' ⊗ a''b
        on(b_suc, lambda k: _t(a * k[0], k[1])),      # ab'≻ ⊗ b''≻
        on(b_suc, lambda k: _t(k[0], a * k[1])),      # b'≻ ⊗ ab''≻
        LinComb({_t(a, b): 1}),                       # a ⊗ b
    ])
    return pre, suc


CHECK_ALGORITHMS = False


@lru_cache(maxsize=None)
def _delta_pre_basis(f: Forest) -> LinComb:
    pre = delta_halves_recursive(f)[0]
    if CHECK_ALGORITHMS:
        assert pre == delta_pre_cuts(f), f"Δ≺ algorithms disagree on {f}"
    return pre


@lru_cache(maxsize=None)
def _delta_suc_basis(f: Forest) -> LinComb:
    _require_nonempty(f)
    return reduced_coproduct(f) - _delta_pre_basis(f)


def delta_pre(x: LinComb | Forest) -> LinComb:
    """Left half-coproduct Δ≺ (recursive algorithm; cut filter under CHECK_ALGORITHMS)."""
    if isinstance(x, Forest):
        return _delta_pre_basis(x)
    return lc_apply(_delta_pre_basis, x)


def delta_suc(x: LinComb | Forest) -> LinComb:
    """Right half-coproduct Δ≻ = Δ̃ − Δ≺."""
    if isinstance(x, Forest):
        return _delta_suc_basis(x)
    return lc_apply(_delta_suc_basis, x)


def delta_tilde(x: LinComb | Forest) -> LinComb:
    if isinstance(x, Forest):
        return reduced_coproduct(x)
    return lc_apply(reduced_coproduct, x)


def delta_full(x: LinComb | Forest) -> LinComb:
    if isinstance(x, Forest):
        return coproduct(x)
    return lc_apply(coproduct, x)


# ------------------------------------------------------- the primed pair

@lru_cache(maxsize=None)
def _delta_pre_prime_basis(f: Forest) -> LinComb:
    _require_nonempty(f)
    if len(f.trees) == 1:
        return ZERO
    return _lc((p, r) for c, p, r in enumerate_cuts(f) if c.parts[-1] == TOTAL_CUT)


@lru_cache(maxsize=None)
def _delta_suc_prime_basis(f: Forest) -> LinComb:
    return reduced_coproduct(f) - _delta_pre_prime_basis(f)


def delta_pre_prime(x: LinComb | Forest) -> LinComb:
    """Δ′≺: cuts whose last-tree component is total (0 on single trees)."""
    if isinstance(x, Forest):
        return _delta_pre_prime_basis(x)
    return lc_apply(_delta_pre_prime_basis, x)


def delta_suc_prime(x: LinComb | Forest) -> LinComb:
    if isinstance(x, Forest):
        return _delta_suc_prime_basis(x)
    return lc_apply(_delta_suc_prime_basis, x)


# --------------------------------------------------------------- iterates

def iter_delta_pre(x: LinComb, k: int) -> LinComb:
    """Δ≺^k: apply Δ≺ to the first factor, k times."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = x
    for _ in range(k):
        if not out:
            break
        out = apply_on_factor(out, 0, _delta_pre_basis)
    return out


def iter_delta_tilde(x: LinComb, k: int) -> LinComb:
    """Δ̃^k: apply Δ̃ to the last factor, k times."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = x
    for i in range(k):
        if not out:
            break
        out = apply_on_factor(out, i, reduced_coproduct)
    return out


# ----------------------------------------------------------------- antipode

@lru_cache(maxsize=None)
def _antipode_basis(f: Forest) -> LinComb:
    if not f:
        return LinComb.basis(ONE)
    out = [LinComb({f: -1})]
    for key, c in reduced_coproduct(f).items():
        left, right = key
        out.append(lc_scale(-c, concat(_antipode_basis(left), LinComb.basis(right))))
    return lc_sum(out)


@lru_cache(maxsize=None)
def antipode_right(f: Forest) -> LinComb:
    """S(F) = −F − Σ F′·S(F″), the mirror recursion."""
    if not f:
        return LinComb.basis(ONE)
    out = [LinComb({f: -1})]
    for key, c in reduced_coproduct(f).items():
        left, right = key
        out.append(lc_scale(-c, concat(LinComb.basis(left), antipode_right(right))))
    return lc_sum(out)


def antipode(x: LinComb | Forest) -> LinComb:
    """S(F) = −F − Σ S(F′)·F″ over the reduced coproduct."""
    if isinstance(x, Forest):
        return _antipode_basis(x)
    return lc_apply(_antipode_basis, x)


def antipode_identity(f: Forest) -> LinComb:
    """m∘(S⊗Id)∘Δ applied to F; equals ε(F)·1."""
    return lc_sum(concat(antipode(k[0]), LinComb.basis(k[1])) * c
                  for k, c in coproduct(f).items())
