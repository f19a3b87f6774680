import json

import pytest

from bidend.cli import main
from bidend.golden import run_all


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


@pytest.mark.parametrize("argv, expected", [
    (["fqsym", "mul", "1", "1"], "1*12 + 1*21"),
    (["fqsym", "preml", "1", "1"], "1*21"),
    (["fqsym", "copl", "21"], "1*(1 # 1)"),
    (["hck", "cop", "a[b]", "--decorations", "a,b"], "1*(1 # a[b]) + 1*(b # a) + 1*(a[b] # 1)"),
    (["hck", "mul", "*", "*[*]"], "1*(* *[*])"),
    (["pair", "*", "*", "--oracle", "both"], "1"),
    (["pair", "* *", "* *"], "2"),
    (["halfprod", "preml", "*", "*"], "1**[*]"),
    (["series", "p-from-dims", "--dims", "1,2,6,24"], "1,0,1,6"),
    (["prim", "dims", "--max", "4"], "1,0,1,6"),
    (["prim", "basis", "--degree", "3"], "-1*132 + 1*231"),
])
def test_verbs(capsys, argv, expected):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    assert out.strip() == expected


def test_pair_table(capsys):
    status, out, _ = run(capsys, "pair", "table", "--weight", "2", "--format", "json")
    assert status == 0
    assert json.loads(out) == {"forests": ["* *", "*[*]"], "matrix": [[2, 1], [1, 1]]}


@pytest.mark.parametrize("argv", [
    ["hck", "cop", "a[b"],
    ["hck", "cop", "z", "--decorations", "a,b"],
    ["fqsym", "mul", "1", "2/0*12"],
    ["fqsym", "mul", "1"],
    ["fqsym", "cop", "13"],
    ["pair", "table"],
    ["series", "r-from-d"],
])
def test_parse_errors_exit_2(capsys, argv):
    status, _, err = run(capsys, *argv)
    assert status == 2
    assert err.startswith("bidend: error:")


def test_argparse_rejects_unknown_verb(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_laws_pass_and_fail(capsys):
    status, out, _ = run(capsys, "laws", "--suite", "dendriform", "--samples", "0",
                         "--maxdeg", "4", "--json")
    assert status == 0 and json.loads(out)["ok"]
    status, out, _ = run(capsys, "laws", "--suite", "bidendriform", "--algebra", "hck-prime",
                         "--decorations", "d", "--samples", "0", "--maxdeg", "4")
    assert status == 1
    assert out.strip().splitlines()[-1] == "FAIL"


def test_iso_check(capsys):
    status, out, _ = run(capsys, "iso", "check", "--max", "3", "--json")
    assert status == 0
    assert [r["rank"] for r in json.loads(out)["rows"]] == [1, 2, 6]


def test_golden_run(capsys):
    status, out, _ = run(capsys, "golden", "run")
    assert status == 0
    assert len(out.strip().splitlines()) == len(run_all())
    status, out, _ = run(capsys, "golden", "run", "--list")
    assert status == 0 and "hck_coproducts.yaml" in out
