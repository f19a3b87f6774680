"""The bar tensor product of dendriform algebras and a law-checking harness.

Laws are data: each one is a pair of expression trees over a small
signature (half-products, products, half-coproducts, tensor plumbing,
module actions, pairings) interpreted by :func:`evaluate`.  A suite is a
list of law identifiers; :func:`run_suite` instantiates every law
exhaustively up to a degree threshold and by seeded random sampling above
it, and compares both sides by exact equality.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from itertools import product as cartesian
from typing import Any, Callable, Iterator, Sequence

from .core import LinComb, Tensor, ZERO, apply_on_factor, lc_bilinear, lc_sum, lc_tensor
from .pforest import DecorationSet
from .prim import BidendAlgebraHandle, fqsym_handle, hck_handle

# ------------------------------------------------------------ bar tensors


class BarKey(tuple):
    """Basis key of A ⊗̄ B: (a, b), (a, None) for a⊗1 or (None, b) for 1⊗b."""

    __slots__ = ()

    def __new__(cls, left: Any, right: Any) -> "BarKey":
        if left is None and right is None:
            raise ValueError("1⊗1 is not an element of the bar tensor product")
        return super().__new__(cls, (left, right))

    @property
    def left(self) -> Any:
        return self[0]

    @property
    def right(self) -> Any:
        return self[1]

    @property
    def sort(self) -> str:
        if self[0] is None:
            return "1b"
        return "a1" if self[1] is None else "ab"

    @property
    def degree(self) -> int:
        return sum(k.degree for k in self if k is not None)

    def sort_key(self) -> tuple:
        return (self.degree,) + tuple(() if k is None else (k.sort_key(),) for k in self)

    def __str__(self) -> str:
        def part(k):
            if k is None:
                return "1"
            return f"{{{k}}}" if isinstance(k, BarKey) else str(k)
        return f"{part(self[0])} | {part(self[1])}"

    def __repr__(self) -> str:
        return f"BarKey({self[0]!r}, {self[1]!r})"


# Each entry gives (left component, right component) of X ≺ Y (resp. X ≻ Y)
# for X of sort s1 and Y of sort s2.  Components: "mul"/"prec"/"succ" combine
# the two operands' entries, "left"/"right" copy the entry of X/Y, "unit" is 1.
# None means the product is zero.
PREC_TABLE: dict[tuple[str, str], tuple[str, str] | None] = {
    ("ab", "ab"): ("mul", "prec"),
    ("ab", "a1"): ("mul", "left"),
    ("ab", "1b"): ("left", "prec"),
    ("a1", "ab"): None,
    ("a1", "a1"): ("prec", "unit"),
    ("a1", "1b"): None,
    ("1b", "ab"): ("right", "prec"),
    ("1b", "a1"): ("right", "left"),
    ("1b", "1b"): ("unit", "prec"),
}
SUCC_TABLE: dict[tuple[str, str], tuple[str, str] | None] = {
    ("ab", "ab"): ("mul", "succ"),
    ("ab", "a1"): None,
    ("ab", "1b"): ("left", "succ"),
    ("a1", "ab"): ("mul", "right"),
    ("a1", "a1"): ("succ", "unit"),
    ("a1", "1b"): ("left", "right"),
    ("1b", "ab"): ("right", "succ"),
    ("1b", "a1"): None,
    ("1b", "1b"): ("unit", "succ"),
}


class BarAlgebra:
    """Dendriform operations on iterated bar tensors over one base algebra.

    Keys may nest (a BarKey inside a BarKey); components are dispatched on
    their key type, so (A⊗̄A)⊗̄A and A⊗̄(A⊗̄A) share one implementation.
    """

    def __init__(self, base: BidendAlgebraHandle):
        self.base = base

    # operations on single keys (never None)
    def key_op(self, op: str, x: Any, y: Any) -> LinComb:
        if isinstance(x, BarKey):
            return self._bar_keys(op, x, y)
        bx, by = LinComb.basis(x), LinComb.basis(y)
        if op == "prec":
            return self.base.prec(bx, by)
        if op == "succ":
            return self.base.succ(bx, by)
        return self.base.mul(bx, by)

    def _component(self, spec: str, x: Any, y: Any) -> list[tuple[Any, Fraction]]:
        if spec == "unit":
            return [(None, Fraction(1))]
        if spec == "left":
            return [(x, Fraction(1))]
        if spec == "right":
            return [(y, Fraction(1))]
        return self.key_op(spec, x, y).items()

    def _bar_keys(self, op: str, x: BarKey, y: BarKey) -> LinComb:
        if op == "mul":
            return self._bar_keys("prec", x, y) + self._bar_keys("succ", x, y)
        entry = (PREC_TABLE if op == "prec" else SUCC_TABLE)[(x.sort, y.sort)]
        if entry is None:
            return ZERO
        ls, rs = entry
        out: dict[BarKey, Fraction] = {}
        for lk, lc in self._component(ls, x.left, y.left):
            for rk, rc in self._component(rs, x.right, y.right):
                k = BarKey(lk, rk)
                out[k] = out.get(k, 0) + lc * rc
        return LinComb(out)

    def prec(self, x: LinComb, y: LinComb) -> LinComb:
        return lc_bilinear(lambda a, b: self._bar_keys("prec", a, b), x, y)

    def succ(self, x: LinComb, y: LinComb) -> LinComb:
        return lc_bilinear(lambda a, b: self._bar_keys("succ", a, b), x, y)

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        """Componentwise product in the unitalization (equals ≺ + ≻)."""
        def on_keys(a: BarKey, b: BarKey) -> LinComb:
            out: dict[BarKey, Fraction] = {}
            for lk, lc in self._unital(a.left, b.left):
                for rk, rc in self._unital(a.right, b.right):
                    if lk is None and rk is None:
                        continue
                    k = BarKey(lk, rk)
                    out[k] = out.get(k, 0) + lc * rc
            return LinComb(out)
        return lc_bilinear(on_keys, x, y)

    def _unital(self, x: Any, y: Any) -> list[tuple[Any, Fraction]]:
        if x is None:
            return [(y, Fraction(1))]
        if y is None:
            return [(x, Fraction(1))]
        return self.key_op("mul", x, y).items()

    # coproducts into A ⊗̄ A
    def _to_bar(self, x: LinComb) -> LinComb:
        return LinComb((BarKey(k[0], k[1]), c) for k, c in x.items())

    def delta(self, x: LinComb) -> LinComb:
        """Δ(a) = Δ̃(a) + a⊗1 + 1⊗a."""
        return (self._to_bar(self.base.delta_tilde(x))
                + LinComb((BarKey(k, None), c) for k, c in x.items())
                + LinComb((BarKey(None, k), c) for k, c in x.items()))

    def delta_pre(self, x: LinComb) -> LinComb:
        """Δ̄≺(a) = Δ≺(a) + a⊗1."""
        return self._to_bar(self.base.delta_pre(x)) + LinComb((BarKey(k, None), c) for k, c in x.items())

    def delta_suc(self, x: LinComb) -> LinComb:
        """Δ̄≻(a) = Δ≻(a) + 1⊗a."""
        return self._to_bar(self.base.delta_suc(x)) + LinComb((BarKey(None, k), c) for k, c in x.items())


def bar(left: Any, right: Any) -> LinComb:
    return LinComb.basis(BarKey(left, right))


def associator_key(k: BarKey) -> BarKey:
    """(a⊗b)⊗c ↦ a⊗(b⊗c) on keys of (A⊗̄B)⊗̄C, units included."""
    inner, c = k.left, k.right
    a, b = (None, None) if inner is None else (inner.left, inner.right)
    rest = None if b is None and c is None else BarKey(b, c)
    return BarKey(a, rest)


def associator(x: LinComb) -> LinComb:
    return LinComb((associator_key(k), c) for k, c in x.items())


def bar_keys(base: BidendAlgebraHandle, n: int, nested: bool = False) -> list[BarKey]:
    """Basis of (A⊗̄A)_n, or of ((A⊗̄A)⊗̄A)_n when ``nested``."""
    left = (lambda m: bar_keys(base, m)) if nested else base.basis_of
    out = [BarKey(k, None) for k in left(n)] + [BarKey(None, k) for k in base.basis_of(n)]
    for i in range(1, n):
        out += [BarKey(a, b) for a in left(i) for b in base.basis_of(n - i)]
    return out


# ------------------------------------------------------------ expressions

Expr = Any


def _factors(k: Any) -> tuple:
    return tuple(k) if isinstance(k, Tensor) else (k,)


class Evaluator:
    """Interprets law expressions for one algebra and one module structure."""

    def __init__(self, algebra: BidendAlgebraHandle, module: str = "self"):
        self.A = algebra
        self.bar = BarAlgebra(algebra)
        self.module = module

    def _is_bar(self, *xs: LinComb) -> bool:
        return any(isinstance(k, BarKey) for x in xs for k in x.keys())

    def binary(self, op: str, x: LinComb, y: LinComb) -> LinComb:
        if not x or not y:
            return ZERO
        if self._is_bar(x, y):
            return getattr(self.bar, op)(x, y)
        return getattr(self.A, op)(x, y)

    def unary(self, name: str, x: LinComb) -> LinComb:
        return {"dpre": self.A.delta_pre, "dsuc": self.A.delta_suc,
                "dtil": self.A.delta_tilde, "dbar": self.bar.delta,
                "dbpre": self.bar.delta_pre, "dbsuc": self.bar.delta_suc}[name](x)

    def tensor_pair(self, x: LinComb, y: LinComb) -> Fraction:
        total = Fraction(0)
        for kx, cx in x.items():
            fx = _factors(kx)
            for ky, cy in y.items():
                fy = _factors(ky)
                if len(fx) != len(fy):
                    continue
                v = Fraction(1)
                for p, q in zip(fx, fy):
                    v *= self.A.pairing(LinComb.basis(p), LinComb.basis(q))
                    if not v:
                        break
                total += cx * cy * v
        return total

    def ev(self, e: Expr, env: dict[str, LinComb]) -> Any:
        if isinstance(e, str):
            return env[e]
        head, *args = e
        if head in ("prec", "succ", "mul"):
            return self.binary(head, self.ev(args[0], env), self.ev(args[1], env))
        if head == "+":
            return lc_sum(self.ev(a, env) for a in args)
        if head in ("dpre", "dsuc", "dtil", "dbar", "dbpre", "dbsuc"):
            return self.unary(head, self.ev(args[0], env))
        if head == "on":
            i, name, x = args
            return apply_on_factor(self.ev(x, env), i,
                                   lambda k: self.unary(name, LinComb.basis(k)))
        if head == "t":
            return lc_tensor(self.ev(args[0], env), self.ev(args[1], env))
        if head == "swap":
            i, x = args
            return LinComb((Tensor(f[:i] + (f[i + 1], f[i]) + f[i + 2:]), c)
                           for f, c in ((tuple(k), c) for k, c in self.ev(x, env).items()))
        if head == "m2":
            op, i, x = args
            parts = []
            for k, c in self.ev(x, env).items():
                f = tuple(k)
                mid = self.binary(op, LinComb.basis(f[i]), LinComb.basis(f[i + 1]))
                parts.append(LinComb((Tensor(f[:i] + (m,) + f[i + 2:]) if len(f) > 2 else m, c * cm)
                                     for m, cm in mid.items()))
            return lc_sum(parts)
        if head in ("dashv", "vdash"):
            a, m = self.ev(args[0], env), self.ev(args[1], env)
            op = "prec" if head == "dashv" else "succ"
            if self.module == "bar":
                a = self.bar.delta(a)
            return self.binary(op, a, m)
        if head == "assoc":
            return associator(self.ev(args[0], env))
        if head == "pair":
            return Fraction(self.A.pairing(self.ev(args[0], env), self.ev(args[1], env)))
        if head == "pair2":
            return self.tensor_pair(self.ev(args[0], env), self.ev(args[1], env))
        raise ValueError(f"unknown operation {head!r}")


def evaluate(e: Expr, env: dict[str, LinComb], algebra: BidendAlgebraHandle,
             module: str = "self") -> Any:
    return Evaluator(algebra, module).ev(e, env)


# ------------------------------------------------------------------- laws

@dataclass(frozen=True)
class Law:
    id: str
    variables: tuple[tuple[str, str], ...]  # (name, kind): kind in {"A", "bar", "bar3"}
    lhs: Expr
    rhs: Expr
    module: str = "self"
    # degree of a dependent variable = sum of the degrees of the listed ones
    dependent: tuple[tuple[str, tuple[str, ...]], ...] = ()


def P(x, y): return ("prec", x, y)  # noqa: E704
def S(x, y): return ("succ", x, y)  # noqa: E704
def M(x, y): return ("mul", x, y)  # noqa: E704
def T(x, y): return ("t", x, y)  # noqa: E704
def add(*xs): return ("+",) + xs  # noqa: E704


def mixed(op, X, Y):
    """a'b' ⊗ a'' op b'' from X = a'⊗a'' and Y = b'⊗b''."""
    return ("m2", op, 1, ("m2", "mul", 0, ("swap", 1, T(X, Y))))


def left_split(op, X, b):
    """a' ⊗ a'' op b."""
    return ("m2", op, 1, T(X, b))


def left_mul_out(X, b):
    """a'b ⊗ a''."""
    return ("m2", "mul", 0, ("swap", 1, T(X, b)))


def right_split(op, a, Y):
    """b' ⊗ a op b''."""
    return ("m2", op, 1, ("swap", 0, T(a, Y)))


def right_mul_in(a, Y):
    """ab' ⊗ b''."""
    return ("m2", "mul", 0, T(a, Y))


_ABC = (("a", "A"), ("b", "A"), ("c", "A"))
_AB = _ABC[:2]
_A = _ABC[:1]
Da, DaPre, DaSuc = ("dtil", "a"), ("dpre", "a"), ("dsuc", "a")
Db, DbPre, DbSuc = ("dtil", "b"), ("dpre", "b"), ("dsuc", "b")

LAWS: dict[str, Law] = {law.id: law for law in [
    # dendriform algebra
    Law("dend-left", _ABC, P(P("a", "b"), "c"), P("a", add(P("b", "c"), S("b", "c")))),
    Law("dend-middle", _ABC, P(S("a", "b"), "c"), S("a", P("b", "c"))),
    Law("dend-right", _ABC, S(add(P("a", "b"), S("a", "b")), "c"), S("a", S("b", "c"))),
    Law("assoc", _ABC, M(M("a", "b"), "c"), M("a", M("b", "c"))),
    # dendriform coalgebra
    Law("codend-left", _A, ("on", 0, "dpre", DaPre),
        add(("on", 1, "dpre", DaPre), ("on", 1, "dsuc", DaPre))),
    Law("codend-middle", _A, ("on", 0, "dsuc", DaPre), ("on", 1, "dpre", DaSuc)),
    Law("codend-right", _A, add(("on", 0, "dpre", DaSuc), ("on", 0, "dsuc", DaSuc)),
        ("on", 1, "dsuc", DaSuc)),
    Law("coassoc", _A, ("on", 0, "dtil", Da), ("on", 1, "dtil", Da)),
    # dendriform bialgebra
    Law("cop-of-prec", _AB, ("dtil", P("a", "b")),
        add(mixed("prec", Da, Db), left_split("prec", Da, "b"), left_mul_out(Da, "b"),
            right_split("prec", "a", Db), T("b", "a"))),
    Law("cop-of-succ", _AB, ("dtil", S("a", "b")),
        add(mixed("succ", Da, Db), left_split("succ", Da, "b"), right_mul_in("a", Db),
            right_split("succ", "a", Db), T("a", "b"))),
    Law("cop-of-product", _AB, ("dtil", M("a", "b")),
        add(mixed("mul", Da, Db), left_split("mul", Da, "b"), right_mul_in("a", Db),
            left_mul_out(Da, "b"), right_split("mul", "a", Db), T("a", "b"), T("b", "a"))),
    # codendriform bialgebra
    Law("csuc-of-product", _AB, ("dsuc", M("a", "b")),
        add(mixed("mul", Da, DbSuc), left_split("mul", Da, "b"), right_mul_in("a", DbSuc),
            right_split("mul", "a", DbSuc), T("a", "b"))),
    Law("cpre-of-product", _AB, ("dpre", M("a", "b")),
        add(mixed("mul", Da, DbPre), left_mul_out(Da, "b"), right_mul_in("a", DbPre),
            right_split("mul", "a", DbPre), T("b", "a"))),
    # bidendriform compatibilities
    Law("csuc-of-succ", _AB, ("dsuc", S("a", "b")),
        add(mixed("succ", Da, DbSuc), left_split("succ", Da, "b"), right_split("succ", "a", DbSuc),
            right_mul_in("a", DbSuc), T("a", "b"))),
    Law("csuc-of-prec", _AB, ("dsuc", P("a", "b")),
        add(mixed("prec", Da, DbSuc), left_split("prec", Da, "b"), right_split("prec", "a", DbSuc))),
    Law("cpre-of-succ", _AB, ("dpre", S("a", "b")),
        add(mixed("succ", Da, DbPre), right_mul_in("a", DbPre), right_split("succ", "a", DbPre))),
    Law("cpre-of-prec", _AB, ("dpre", P("a", "b")),
        add(mixed("prec", Da, DbPre), left_mul_out(Da, "b"), right_split("prec", "a", DbPre),
            T("b", "a"))),
    # dendriform modules: A over itself, and A⊗̄A over A through Δ
    *[Law(f"{tag}{suffix}", (("a", "A"), ("b", "A"), ("m", kind)), lhs, rhs, module)
      for suffix, kind, module in (("", "A", "self"), ("[bar]", "bar", "bar"))
      for tag, lhs, rhs in (
          ("module-left", ("dashv", P("a", "b"), "m"),
           ("dashv", "a", add(("dashv", "b", "m"), ("vdash", "b", "m")))),
          ("module-middle", ("dashv", S("a", "b"), "m"), ("vdash", "a", ("dashv", "b", "m"))),
          ("module-right", ("vdash", add(P("a", "b"), S("a", "b")), "m"), ("vdash", "a", ("vdash", "b", "m"))),
      )],
    # the bar tensor is dendriform, Δ is a morphism into it, Δ̄≺/Δ̄≻ are module morphisms
    *[Law(f"{tag}[bar]", (("a", "bar"), ("b", "bar"), ("c", "bar")), lhs, rhs)
      for tag, lhs, rhs in (
          ("dend-left", P(P("a", "b"), "c"), P("a", add(P("b", "c"), S("b", "c")))),
          ("dend-middle", P(S("a", "b"), "c"), S("a", P("b", "c"))),
          ("dend-right", S(add(P("a", "b"), S("a", "b")), "c"), S("a", S("b", "c"))),
      )],
    Law("cop-of-succ[bar]", _AB, ("dbar", S("a", "b")), S(("dbar", "a"), ("dbar", "b"))),
    Law("cop-of-prec[bar]", _AB, ("dbar", P("a", "b")), P(("dbar", "a"), ("dbar", "b"))),
    Law("csuc-of-succ[bar]", _AB, ("dbsuc", S("a", "b")), S(("dbar", "a"), ("dbsuc", "b"))),
    Law("csuc-of-prec[bar]", _AB, ("dbsuc", P("a", "b")), P(("dbar", "a"), ("dbsuc", "b"))),
    Law("cpre-of-succ[bar]", _AB, ("dbpre", S("a", "b")), S(("dbar", "a"), ("dbpre", "b"))),
    Law("cpre-of-prec[bar]", _AB, ("dbpre", P("a", "b")), P(("dbar", "a"), ("dbpre", "b"))),
    Law("csuc-of-product[bar]", _AB, ("dbsuc", M("a", "b")), M(("dbar", "a"), ("dbsuc", "b"))),
    Law("cpre-of-product[bar]", _AB, ("dbpre", M("a", "b")), M(("dbar", "a"), ("dbpre", "b"))),
    Law("assoc-prec[bar]", (("a", "bar3"), ("b", "bar3")),
        ("assoc", P("a", "b")), P(("assoc", "a"), ("assoc", "b"))),
    Law("assoc-succ[bar]", (("a", "bar3"), ("b", "bar3")),
        ("assoc", S("a", "b")), S(("assoc", "a"), ("assoc", "b"))),
    # bidendriform pairing
    Law("pair-prec", _ABC, ("pair", P("a", "b"), "c"), ("pair2", T("a", "b"), ("dpre", "c")),
        dependent=(("c", ("a", "b")),)),
    Law("pair-succ", _ABC, ("pair", S("a", "b"), "c"), ("pair2", T("a", "b"), ("dsuc", "c")),
        dependent=(("c", ("a", "b")),)),
    Law("pair-prec*", _ABC, ("pair", "a", P("b", "c")), ("pair2", ("dpre", "a"), T("b", "c")),
        dependent=(("a", ("b", "c")),)),
    Law("pair-succ*", _ABC, ("pair", "a", S("b", "c")), ("pair2", ("dsuc", "a"), T("b", "c")),
        dependent=(("a", ("b", "c")),)),
    Law("pair-sym", _AB, ("pair", "a", "b"), ("pair", "b", "a"), dependent=(("b", ("a",)),)),
]}

_DEND = ["dend-left", "dend-middle", "dend-right"]
_CODEND = ["codend-left", "codend-middle", "codend-right"]

SUITES: dict[str, list[str]] = {
    "dendriform": _DEND,
    "codendriform": _CODEND,
    "dend-bialgebra": _DEND + ["coassoc", "cop-of-succ", "cop-of-prec", "cop-of-product"],
    "codend-bialgebra": ["assoc"] + _CODEND + ["csuc-of-product", "cpre-of-product"],
    "bidendriform": _DEND + _CODEND + ["csuc-of-succ", "csuc-of-prec", "cpre-of-succ",
                                       "cpre-of-prec"],
    "module": ["module-left", "module-middle", "module-right",
               "module-left[bar]", "module-middle[bar]", "module-right[bar]"],
    "tensor": [f"{law}[bar]" for law in _DEND + [
        "cop-of-succ", "cop-of-prec", "csuc-of-succ", "csuc-of-prec", "cpre-of-succ",
        "cpre-of-prec", "csuc-of-product", "cpre-of-product", "assoc-prec", "assoc-succ"]],
    "pairing": ["pair-prec", "pair-succ", "pair-prec*", "pair-succ*", "pair-sym"],
}

ALGEBRAS = ("fqsym", "hck-reconstructed", "hck-prime")


def get_algebra(name: str, decorations: DecorationSet | None = None,
                max_degree: int = 5) -> BidendAlgebraHandle:
    if name == "fqsym":
        return fqsym_handle()
    if name == "hck-reconstructed":
        return hck_handle(decorations, max_degree)
    if name == "hck-prime":
        return hck_handle(decorations, max_degree, primed=True)
    raise ValueError(f"unknown algebra {name!r}; choose from {', '.join(ALGEBRAS)}")


# ------------------------------------------------------------ instances

def _basis(A: BidendAlgebraHandle, kind: str, n: int) -> list:
    if kind == "A":
        return A.basis_of(n)
    return bar_keys(A, n, nested=(kind == "bar3"))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _free(law: Law) -> list[tuple[str, str]]:
    dep = {v for v, _ in law.dependent}
    return [(v, k) for v, k in law.variables if v not in dep]


def _complete(law: Law, A: BidendAlgebraHandle, free: dict[str, Any]) -> Iterator[dict[str, Any]]:
    """Extend an assignment of free variables over every dependent variable."""
    kinds = dict(law.variables)
    degrees = {v: k.degree for v, k in free.items()}
    dep_opts = []
    for v, srcs in law.dependent:
        degrees[v] = sum(degrees[s] for s in srcs)
        dep_opts.append([(v, k) for k in _basis(A, kinds[v], degrees[v])])
    for combo in cartesian(*dep_opts):
        yield {**free, **dict(combo)}


def exhaustive_instances(law: Law, A: BidendAlgebraHandle, max_total: int) -> Iterator[dict]:
    free = _free(law)
    for total in range(len(free), max_total + 1):
        for degs in _compositions(total, len(free)):
            choices = [_basis(A, kind, d) for (_, kind), d in zip(free, degs)]
            for combo in cartesian(*choices):
                yield from _complete(law, A, {v: k for (v, _), k in zip(free, combo)})


def random_instances(law: Law, A: BidendAlgebraHandle, lo: int, hi: int, samples: int,
                     rng: random.Random) -> Iterator[dict]:
    free = _free(law)
    lo = max(lo, len(free))
    if hi < lo:
        return
    kinds = dict(law.variables)
    for _ in range(samples):
        total = rng.randint(lo, hi)
        # uniform composition: choose cut points
        cuts = sorted(rng.sample(range(1, total), len(free) - 1))
        degs = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        inst = {v: rng.choice(_basis(A, kind, d)) for (v, kind), d in zip(free, degs)}
        for v, srcs in law.dependent:
            inst[v] = rng.choice(_basis(A, kinds[v], sum(inst[s].degree for s in srcs)))
        yield inst


# -------------------------------------------------------------- reports

@dataclass
class LawFailure:
    law: str
    inputs: dict[str, str]
    lhs: str
    rhs: str


@dataclass
class LawReport:
    suite: str
    algebra: str
    instances: int = 0
    per_law: dict[str, list[int]] = field(default_factory=dict)  # law -> [instances, failures]
    failures: list[LawFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failed_laws(self) -> list[str]:
        return [law for law, (_, bad) in self.per_law.items() if bad]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d

    def format(self) -> str:
        lines = [f"suite {self.suite} on {self.algebra}: {self.instances} instances"]
        for law, (n, bad) in self.per_law.items():
            lines.append(f"  {law}: {n} instances, {bad} failures")
        for f in self.failures:
            args = ", ".join(f"{k}={v}" for k, v in f.inputs.items())
            lines.append(f"  FAIL {f.law} at {args}: lhs {f.lhs} != rhs {f.rhs}")
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines)


MAX_WITNESSES_PER_LAW = 3


def check_law(law: Law, A: BidendAlgebraHandle, instances, report: LawReport) -> None:
    ev = Evaluator(A, law.module)
    counts = report.per_law.setdefault(law.id, [0, 0])
    for inst in instances:
        env = {v: LinComb.basis(k) for v, k in inst.items()}
        lhs, rhs = ev.ev(law.lhs, env), ev.ev(law.rhs, env)
        counts[0] += 1
        report.instances += 1
        if lhs != rhs:
            counts[1] += 1
            if counts[1] <= MAX_WITNESSES_PER_LAW:
                report.failures.append(LawFailure(law.id, {v: str(k) for v, k in inst.items()},
                                                  str(lhs), str(rhs)))


def run_suite(name: str, algebra: str | BidendAlgebraHandle = "fqsym", max_degree: int = 6,
              samples: int = 500, seed: int = 0, exhaustive_degree: int = 4,
              decorations: DecorationSet | None = None) -> LawReport:
    """Check every law of a suite: exhaustively through ``exhaustive_degree``
    (sum of the free variables' degrees), then ``samples`` random instances
    per law up to ``max_degree``.  Same seed, same report."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if isinstance(algebra, str):
        A = get_algebra(algebra, decorations, max(5, min(max_degree, 6)))
    else:
        A = algebra
    if A.max_degree is not None and name not in ("codendriform", "codend-bialgebra"):
        max_degree = min(max_degree, A.max_degree)
    exhaustive_degree = min(exhaustive_degree, max_degree)
    report = LawReport(name, A.name if isinstance(algebra, BidendAlgebraHandle) else algebra)
    for law_id in SUITES[name]:
        law = LAWS[law_id]
        check_law(law, A, exhaustive_instances(law, A, exhaustive_degree), report)
        if samples and max_degree > exhaustive_degree:
            rng = random.Random(f"{seed}:{name}:{law_id}")
            check_law(law, A, random_instances(law, A, exhaustive_degree + 1, max_degree,
                                               samples, rng), report)
    return report


def check_module_axioms(algebra: BidendAlgebraHandle, max_degree: int = 4) -> LawReport:
    """The three module laws for A acting on itself and on A⊗̄A through Δ, exhaustively."""
    return run_suite("module", algebra, max_degree=max_degree, samples=0,
                     exhaustive_degree=max_degree)


def corrupted(algebra: BidendAlgebraHandle, x: Any, y: Any, delta: LinComb) -> BidendAlgebraHandle:
    """A copy whose x ≺ y is shifted by ``delta``; used to test the harness itself."""
    base_prec = algebra.prec

    def on_keys(a: Any, b: Any) -> LinComb:
        out = base_prec(LinComb.basis(a), LinComb.basis(b))
        return out + delta if (a, b) == (x, y) else out

    return replace(algebra, name=f"{algebra.name}-corrupted",
                   prec=lambda u, v: lc_bilinear(on_keys, u, v), product=None,
                   _basis_cache={})


__all__ = ["BarKey", "BarAlgebra", "PREC_TABLE", "SUCC_TABLE", "bar", "associator",
           "associator_key", "bar_keys", "Evaluator", "evaluate", "Law", "LAWS", "SUITES",
           "ALGEBRAS", "get_algebra", "LawFailure", "LawReport", "run_suite",
           "check_module_axioms", "corrupted", "exhaustive_instances", "random_instances"]
