import pytest

from rhorep import verify
from rhorep.errors import ConsistencyError


def test_run_check_passes():
    result = verify.run_check("dims", {"n": 3, "l": 2, "r": 4})
    assert result["passed"]
    assert result["detail"]["kappa"] == 6


def test_run_check_turns_errors_into_failures(monkeypatch):
    def broken(cell):
        raise ConsistencyError("mismatch", detail={"where": "here"})

    monkeypatch.setitem(verify.CHECKS, "broken", broken)
    result = verify.run_check("broken", {"n": 2})
    assert not result["passed"]
    assert result["detail"]["error"] == "ConsistencyError"
    assert result["detail"]["where"] == "here"


def test_build_cells_small_sweep_keeps_acceptance_cells():
    cells = verify.build_cells(2, 3)
    names = {name for name, _ in cells}
    assert {"dims", "braid", "float_oracle", "lkb", "burau", "split_N20", "generic_braid"} <= names
    assert {"fixture_w32", "fixture_f2u", "cubic", "sq1", "minpol"} <= names
    assert ("lkb", {"n": 3, "r": 3}) not in cells


def test_build_cells_has_no_repeats():
    cells = verify.build_cells(4, 5)
    keys = [(name, tuple(sorted(cell.items()))) for name, cell in cells]
    assert len(keys) == len(set(keys))


@pytest.mark.parametrize(
    "cell",
    [
        ("minpol", {"n": 5, "r": 6, "rep": "N20"}),
        ("minpol", {"n": 4, "r": 6, "rep": "N21"}),
        ("split_N20", {"n": 6, "r": 5}),
        ("split_N20", {"n": 5, "r": 3}),
        ("dims", {"n": 5, "l": 3, "r": 5}),
        ("twist", {"n": 4, "l": 2, "r": 5}),
    ],
)
def test_default_sweep_covers_acceptance_cells(cell):
    assert cell in verify.build_cells(4, 5)


def test_build_cells_default_sweep():
    cells = verify.build_cells(4, 5)
    names = {name for name, _ in cells}
    assert {"fixture_w32", "fixture_f2u", "cubic", "minpol", "restriction", "sq1"} <= names
    assert ("minpol", {"n": 4, "r": 5, "rep": "N20"}) in cells
    assert all(name in verify.CHECKS for name, _ in cells)


def test_fixtures():
    assert verify.check_fixture_w32({})[0]
    assert verify.check_fixture_f2u({})[0]


def test_run_verify_all_report(monkeypatch):
    monkeypatch.setattr(verify, "build_cells", lambda max_n, max_r: [("dims", {"n": 2, "l": 1, "r": 3}), ("lkb", {"n": 3, "r": 3})])
    report = verify.run_verify_all(2, 3, threads=2)
    assert report["total"] == 2
    assert report["failed"] == 0
    assert report["passed"]
    assert [res["check"] for res in report["results"]] == ["dims", "lkb"]
