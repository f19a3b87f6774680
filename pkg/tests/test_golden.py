import pytest

from bidend.golden import golden_files, load, origins, run_all, run_case

CASES = [(name, case) for name in golden_files() for case in load(name)["cases"]]


@pytest.mark.parametrize("name, case", CASES, ids=[f"{n}:{c['id']}" for n, c in CASES])
def test_case(name, case):
    ok, detail = run_case(case)
    assert ok, detail


def test_every_file_states_its_origin():
    assert set(origins()) == set(golden_files())
    assert all(origins().values())


def test_run_all_reports_every_case():
    assert len(run_all()) == len(CASES)


def test_wrong_expectation_is_reported():
    case = dict(load("fqsym_examples.yaml")["cases"][0])
    case["expected"] = ["12"]
    ok, detail = run_case(case)
    assert not ok and detail.startswith("expected")
