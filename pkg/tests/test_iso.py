from math import factorial

import pytest

from bidend import fqsym
from bidend.core import VerificationError
from bidend.fqsym import F
from bidend.iso import build_decorations, psi, require_iso, verify_iso
from bidend.pforest import UnknownDecorationError, parse_forest


def test_decoration_profile():
    data = build_decorations(5)
    assert data.decorations.profile(5) == [1, 0, 1, 6, 39]
    assert data.primitives[data.decorations["p3_1"]] == F("231") - F("132")


def test_psi_small_values():
    decs = build_decorations(4).decorations
    assert psi(parse_forest("p1_1", decs), 4) == F("1")
    assert psi(parse_forest("p1_1[p1_1]", decs), 4) == F("21")
    assert psi(parse_forest("p1_1 p1_1", decs), 4) == fqsym.product(F("1"), F("1"))


def test_unknown_decoration():
    with pytest.raises(UnknownDecorationError):
        psi(parse_forest("zz"), 4)


@pytest.mark.parametrize("n_max", [3, 4])
def test_verify(n_max):
    report = verify_iso(n_max)
    assert report.ok, report.format()
    assert [r.rank for r in report.rows] == [factorial(n) for n in range(1, n_max + 1)]
    assert report.to_dict()["ok"]


def test_require_iso_returns_report():
    assert require_iso(3).ok


def test_report_format_mentions_every_degree():
    text = verify_iso(3).format()
    assert text.splitlines()[-1] == "PASS"
    assert sum(line.startswith("degree") for line in text.splitlines()) == 3
