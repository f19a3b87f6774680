"""Exact sparse linear combinations over ordered basis keys.

Every algebra in the package represents its elements as :class:`LinComb`,
a frozen mapping from basis keys to nonzero :class:`~fractions.Fraction`
coefficients.  A basis key is any hashable object exposing ``degree`` and
``sort_key()``; :class:`Tensor` keys bundle several keys into one factor
sequence.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Mapping

Rational = Fraction


class DomainError(ValueError):
    """A basis map was applied outside its domain."""


def sort_key(key: Any) -> tuple:
    """Total order on heterogeneous basis keys: (degree, canonical text)."""
    return key.sort_key()


class Tensor(tuple):
    """A key of a tensor power: an ordered tuple of basis keys."""

    __slots__ = ()

    def __new__(cls, factors: Iterable[Any]) -> "Tensor":
        t = super().__new__(cls, factors)
        if not t:
            raise ValueError("a tensor key needs at least one factor")
        return t

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self)

    def sort_key(self) -> tuple:
        return tuple(f.sort_key() for f in self)

    def __str__(self) -> str:
        return " # ".join(str(f) for f in self)

    def __repr__(self) -> str:
        return f"Tensor({tuple(self)!r})"


def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _fmt_key(key: Any) -> str:
    s = str(key)
    return f"({s})" if " " in s else s


class LinComb(Mapping):
    """Finite formal sum of basis keys with exact rational coefficients.

    Instances are immutable.  Zero coefficients are never stored and
    iteration follows the basis order.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Any, Any] | Iterable[tuple[Any, Any]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Any, Fraction] = {}
        for k, c in items:
            acc[k] = acc.get(k, 0) + Fraction(c)
        self._terms = {k: c for k, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LinComb":
        # trusted constructor: caller guarantees no zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, key: Any, coeff: Any = 1) -> "LinComb":
        return cls({key: coeff})

    def __getitem__(self, key: Any) -> Fraction:
        return self._terms[key]

    def coeff(self, key: Any) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __iter__(self) -> Iterator[Any]:
        return iter(sorted(self._terms, key=sort_key))

    def __len__(self) -> int:
        return len(self._terms)

    def items(self):  # type: ignore[override]
        return [(k, self._terms[k]) for k in self]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LinComb") -> "LinComb":
        return lc_add(self, other)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return lc_add(self, lc_scale(-1, other))

    def __neg__(self) -> "LinComb":
        return lc_scale(-1, self)

    def __mul__(self, c: Any) -> "LinComb":
        return lc_scale(c, self)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{_fmt_coeff(c)}*{_fmt_key(k)}" for k, c in self.items())

    def __repr__(self) -> str:
        return f"LinComb<{self}>"

    def degrees(self) -> set[int]:
        return {k.degree for k in self._terms}

    def support(self) -> list[Any]:
        return list(self)


ZERO = LinComb()


def lc_add(x: LinComb, y: LinComb) -> LinComb:
    if not y:
        return x
    if not x:
        return y
    out = dict(x._terms)
    for k, c in y._terms.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return LinComb._raw(out)


def lc_sum(xs: Iterable[LinComb]) -> LinComb:
    out: dict[Any, Fraction] = {}
    for x in xs:
        for k, c in x._terms.items():
            out[k] = out.get(k, 0) + c
    return LinComb._raw({k: c for k, c in out.items() if c})


def lc_scale(c: Any, x: LinComb) -> LinComb:
    c = Fraction(c)
    if c == 0:
        return ZERO
    if c == 1:
        return x
    return LinComb._raw({k: c * v for k, v in x._terms.items()})


def lc_tensor(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear tensor product; factors of Tensor keys are spliced flat."""
    out: dict[Any, Fraction] = {}
    for kx, cx in x._terms.items():
        fx = tuple(kx) if isinstance(kx, Tensor) else (kx,)
        for ky, cy in y._terms.items():
            fy = tuple(ky) if isinstance(ky, Tensor) else (ky,)
            k = Tensor(fx + fy)
            out[k] = out.get(k, 0) + cx * cy
    return LinComb._raw({k: c for k, c in out.items() if c})


def lc_apply(f: Callable[[Any], LinComb], x: LinComb) -> LinComb:
    """Linear extension of a basis map."""
    out: dict[Any, Fraction] = {}
    for k, c in x._terms.items():
        try:
            image = f(k)
        except DomainError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"map undefined on basis key {k}") from exc
        for kk, cc in image._terms.items():
            out[kk] = out.get(kk, 0) + c * cc
    return LinComb._raw({k: c for k, c in out.items() if c})


def lc_bilinear(f: Callable[[Any, Any], LinComb], x: LinComb, y: LinComb) -> LinComb:
    """Bilinear extension of a map defined on pairs of basis keys."""
    out: dict[Any, Fraction] = {}
    for kx, cx in x._terms.items():
        for ky, cy in y._terms.items():
            for kk, cc in f(kx, ky)._terms.items():
                out[kk] = out.get(kk, 0) + cx * cy * cc
    return LinComb._raw({k: c for k, c in out.items() if c})


def lc_pair(f: Callable[[Any, Any], Any], x: LinComb, y: LinComb) -> Fraction:
    """Bilinear scalar form from its values on basis pairs."""
    total = Fraction(0)
    for kx, cx in x._terms.items():
        for ky, cy in y._terms.items():
            v = f(kx, ky)
            if v:
                total += cx * cy * v
    return total


def apply_on_factor(x: LinComb, i: int, f: Callable[[Any], LinComb]) -> LinComb:
    """Apply a basis map to factor ``i`` of every tensor key of ``x``.

    When ``f`` returns tensor keys, their factors replace factor ``i``.
    """
    out: dict[Any, Fraction] = {}
    for k, c in x._terms.items():
        factors = tuple(k) if isinstance(k, Tensor) else (k,)
        head, mid, tail = factors[:i], factors[i], factors[i + 1:]
        for kk, cc in f(mid)._terms.items():
            inner = tuple(kk) if isinstance(kk, Tensor) else (kk,)
            key = Tensor(head + inner + tail)
            out[key] = out.get(key, 0) + c * cc
    return LinComb._raw({k: c for k, c in out.items() if c})


def map_factors(x: LinComb, fs: Iterable[Callable[[Any], LinComb]]) -> LinComb:
    """(f_1 ⊗ ... ⊗ f_k)(x) for x over k-fold tensor keys."""
    fs = list(fs)
    parts = []
    for k, c in x._terms.items():
        acc = LinComb._raw({(): Fraction(1)})
        for f, factor in zip(fs, k):
            img = f(factor)
            nxt: dict[Any, Fraction] = {}
            for prefix, pc in acc._terms.items():
                for kk, cc in img._terms.items():
                    key = prefix + (tuple(kk) if isinstance(kk, Tensor) else (kk,))
                    nxt[key] = nxt.get(key, 0) + pc * cc
            acc = LinComb._raw({kk: cc for kk, cc in nxt.items() if cc})
        parts.append(LinComb._raw({Tensor(kk): c * cc for kk, cc in acc._terms.items()}))
    return lc_sum(parts)


class VerificationError(AssertionError):
    """A computed identity that must hold did not; carries a witness."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class LinCombSyntaxError(ValueError):
    """Text that is not a linear combination in the canonical form."""


def _split_top(text: str) -> list[tuple[int, str]]:
    """Split on ' + ' and ' - ' outside brackets, returning (sign, chunk) pairs."""
    out, depth, start, sign, i = [], 0, 0, 1, 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and text.startswith((" + ", " - "), i):
            out.append((sign, text[start:i]))
            sign = 1 if text[i + 1] == "+" else -1
            i += 3
            start = i
            continue
        i += 1
    out.append((sign, text[start:]))
    return out


def _unwrap(s: str) -> str:
    if len(s) > 2 and s[0] == "(" and s[-1] == ")":
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                return s[1:-1] if i == len(s) - 1 else s
    return s


def parse_lincomb(text: str, parse_key: Callable[[str], Any]) -> LinComb:
    """Inverse of ``str(LinComb)``; bare keys and ' - ' are also accepted."""
    text = text.strip()
    if not text:
        raise LinCombSyntaxError("empty expression")
    if text == "0":
        return ZERO
    terms: dict[Any, Fraction] = {}
    for sign, chunk in _split_top(text):
        chunk = chunk.strip()
        m = re.fullmatch(r"([+-]?\d+(?:/\d+)?)\*(.+)", chunk)
        if m:
            if re.fullmatch(r"[+-]?\d+/0+", m.group(1)):
                raise LinCombSyntaxError(f"zero denominator in {chunk!r}")
            c, body = Fraction(m.group(1)), m.group(2)
        elif chunk.startswith("-"):
            c, body = Fraction(-1), chunk[1:]
        else:
            c, body = Fraction(1), chunk
        if not body:
            raise LinCombSyntaxError(f"missing basis element in {chunk!r}")
        key = parse_key(_unwrap(body.strip()))
        terms[key] = terms.get(key, 0) + sign * c
    return LinComb(terms)
