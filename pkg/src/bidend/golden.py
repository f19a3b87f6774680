"""Replay the checked-in golden examples against the implementation.

Each YAML file under ``data/golden`` carries an ``origin`` describing where
its values come from and a list of cases; every case is recomputed and
compared by exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Any, Callable

import yaml

from . import fqsym, hck
from .core import LinComb, Tensor, parse_lincomb
from .pairing import pair, pair_oracle
from .pforest import Forest, parse_forest
from .prim import fqsym_handle, prim_tot_basis, subspace
from .series import Series, factorial_series, p_from_r


@dataclass
class GoldenResult:
    file: str
    case: str
    ok: bool
    detail: str = ""


def golden_files() -> list[str]:
    root = resources.files("bidend") / "data" / "golden"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".yaml"))


def load(name: str) -> dict:
    text = (resources.files("bidend") / "data" / "golden" / name).read_text(encoding="utf-8")
    return yaml.safe_load(text)


def origins() -> dict[str, str]:
    return {name: " ".join(load(name)["origin"].split()) for name in golden_files()}


def _key_parser(algebra: str) -> Callable[[str], Any]:
    return parse_forest if algebra == "hck" else fqsym.parse_perm


def _tensor_parser(algebra: str) -> Callable[[str], Any]:
    one = _key_parser(algebra)

    def parse(text: str) -> Any:
        parts = [p.strip() for p in text.split(" # ")]
        return Tensor(one(p) for p in parts) if len(parts) > 1 else one(parts[0])

    return parse


_OPS: dict[tuple[str, str], Callable[..., LinComb]] = {
    ("hck", "coproduct"): hck.coproduct,
    ("hck", "delta_pre"): hck.delta_pre,
    ("hck", "delta_suc"): hck.delta_suc,
    ("hck", "delta_pre_prime"): hck.delta_pre_prime,
    ("hck", "delta_suc_prime"): hck.delta_suc_prime,
    ("fqsym", "product"): fqsym.product,
    ("fqsym", "prec"): fqsym.prec,
    ("fqsym", "succ"): fqsym.succ,
    ("fqsym", "coproduct"): fqsym.coproduct,
    ("fqsym", "delta_pre"): fqsym.delta_pre,
    ("fqsym", "delta_suc"): fqsym.delta_suc,
}


def _run_lincomb(case: dict) -> tuple[bool, str]:
    alg = case["algebra"]
    key = _key_parser(alg)
    if alg == "hck":
        args = [key(a) for a in case["args"]]
    else:
        args = [LinComb.basis(key(a)) for a in case["args"]]
    got = _OPS[(alg, case["op"])](*args)
    parse = _tensor_parser(alg)
    expected = parse_lincomb(" + ".join(f"({t})" if " " in t else t for t in case["expected"]),
                             parse)
    if got == expected:
        return True, f"{len(got)} terms"
    return False, f"expected {expected}\n    got      {got}"


def _run_table(case: dict) -> tuple[bool, str]:
    forests: list[Forest] = [parse_forest(s) for s in case["forests"]]
    if any(f.degree != case["weight"] for f in forests):
        return False, "row forest of the wrong weight"
    want = case["matrix"]
    for name, fn in (("recursive", pair), ("bijection", pair_oracle)):
        got = [[fn(f, g) for g in forests] for f in forests]
        if got != want:
            return False, f"{name} pairing differs: {got}"
    return True, f"{len(forests)}x{len(forests)}, recursive and bijection"


def _run_series(case: dict) -> tuple[bool, str]:
    want = case["expected"]
    got = p_from_r(factorial_series(len(want))).integer_coeffs()[1:]
    return got == want, "" if got == want else f"got {got}"


def _run_primitives(case: dict) -> tuple[bool, str]:
    A = fqsym_handle()
    n = case["degree"]
    vecs = [parse_lincomb(v, fqsym.parse_perm) for v in case["vectors"]]
    kernel = prim_tot_basis(A, n)
    outside = [str(v) for v in vecs if not kernel.contains(v)]
    if outside:
        return False, f"not totally primitive: {outside}"
    given = subspace(A, n, vecs)
    if given.dim != len(vecs):
        return False, "vectors are linearly dependent"
    if not given.same_span(kernel):
        return False, f"span has dimension {given.dim}, kernel {kernel.dim}"
    return True, f"dimension {kernel.dim}"


def run_case(case: dict) -> tuple[bool, str]:
    op = case["op"]
    if op == "pairing-table":
        return _run_table(case)
    if op == "p-from-factorials":
        return _run_series(case)
    if op == "primitive-basis":
        return _run_primitives(case)
    return _run_lincomb(case)


def run_all() -> list[GoldenResult]:
    out = []
    for name in golden_files():
        for case in load(name)["cases"]:
            try:
                ok, detail = run_case(case)
            except Exception as exc:  # a crash is a failed case, not a crashed run
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            out.append(GoldenResult(name, case["id"], ok, detail))
    return out


__all__ = ["GoldenResult", "golden_files", "load", "origins", "run_case", "run_all", "Series"]
