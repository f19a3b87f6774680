"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

DEFAULT_ORDER = 12


class Series:
    """c_0 + c_1 X + ... + c_N X^N, with arithmetic truncated at order N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * (order + 1))[:order + 1]
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_dims(cls, dims: Sequence, order: int | None = None) -> "Series":
        """Series with zero constant term and coefficient dims[n-1] at X^n."""
        return cls([0, *dims], order if order is not None else len(dims))

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def _align(self, other: "Series | int") -> tuple["Series", "Series"]:
        if not isinstance(other, Series):
            other = Series([other], self.order)
        n = min(self.order, other.order)
        return Series(self.coeffs, n), Series(other.coeffs, n)

    def __add__(self, other: "Series | int") -> "Series":
        a, b = self._align(other)
        return Series(x + y for x, y in zip(a.coeffs, b.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(-x for x in self.coeffs)

    def __sub__(self, other: "Series | int") -> "Series":
        return self + (-other if isinstance(other, Series) else -Fraction(other))

    def __rsub__(self, other: int) -> "Series":
        return -self + other

    def __mul__(self, other: "Series | int") -> "Series":
        if not isinstance(other, Series):
            return Series(x * other for x in self.coeffs)
        a, b = self._align(other)
        n = a.order
        out = [Fraction(0)] * (n + 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j in range(n + 1 - i):
                    out[i + j] += x * b.coeffs[j]
        return Series(out)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [1 / c0]
        for n in range(1, self.order + 1):
            s = sum(self.coeffs[k] * out[n - k] for k in range(1, n + 1))
            out.append(-s / c0)
        return Series(out)

    def __truediv__(self, other: "Series") -> "Series":
        a, b = self._align(other)
        return a * b.inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Series):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def integer_coeffs(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError(f"non-integral coefficients in {self}")
        return [int(c) for c in self.coeffs]

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Series([{self}])"


def r_from_d(d: Series) -> Series:
    """The series R with R(0) = 1 and R = 1 + D·R², by coefficient recursion.

    Coefficient n counts the forests of degree n whose vertices are
    decorated by a set with generating series D.
    """
    if d[0] != 0:
        raise ValueError("D must have zero constant term")
    n_max = d.order
    r = [Fraction(1)] + [Fraction(0)] * n_max
    sq = [Fraction(0)] * (n_max + 1)  # coefficients of R², kept up to date
    for n in range(1, n_max + 1):
        sq[n - 1] = sum(r[i] * r[n - 1 - i] for i in range(n))
        # [X^n] D·R² only involves R² up to X^{n-1}
        r[n] = sum(d[k] * sq[n - k] for k in range(1, n + 1))
    return Series(r)


def p_from_r(r_plus: Series) -> Series:
    """P = R₊ / (1 + R₊)²."""
    if r_plus[0] != 0:
        raise ValueError("R₊ must have zero constant term")
    one_plus = r_plus + 1
    return r_plus / (one_plus * one_plus)


def d_from_r(r_plus: Series) -> Series:
    """Decoration series D from forest counts R = 1 + R₊; inverse of :func:`r_from_d`."""
    return p_from_r(r_plus)


def factorial_series(order: int = DEFAULT_ORDER) -> Series:
    """Σ_{n≥1} n! X^n."""
    return Series([0] + [factorial(n) for n in range(1, order + 1)])


def catalan_series(order: int = DEFAULT_ORDER) -> Series:
    return Series([comb(2 * n, n) // (n + 1) for n in range(order + 1)])


__all__ = ["Series", "r_from_d", "p_from_r", "d_from_r", "factorial_series",
           "catalan_series", "DEFAULT_ORDER"]
