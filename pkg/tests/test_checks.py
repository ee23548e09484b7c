import json

import pytest

from main import EXIT_OK, EXIT_USAGE, main
from src.config.constants import FULL_SUITE, QUICK_SUITE, STATUS_FAIL
from src.core.checks import check_names, run_check, run_suite, suite_entries
from src.core.errors import UnknownCheckError


def test_every_suite_entry_is_registered():
    names = set(check_names())
    assert {name for name, _ in FULL_SUITE} <= names


def test_quick_suite_is_part_of_full():
    assert FULL_SUITE[:len(QUICK_SUITE)] == QUICK_SUITE


def test_cayley_hamilton_by_name():
    report = run_check("cayley-hamilton", {"family": "dj", "n": 2})
    assert report.passed
    assert report.params == {"family": "dj", "n": 2}


def test_qh_commute_by_name():
    assert run_check("qh-commute", {"n": 2, "k": 1, "l": 2, "sites": "1,2"}).passed


def test_unknown_check():
    with pytest.raises(UnknownCheckError):
        run_check("nope")


def test_invalid_parameter_becomes_failure():
    report = run_check("braiding", {"family": "dj", "n": "two"})
    assert report.status == STATUS_FAIL
    assert "ValueError" in report.witness


def test_missing_rmatrix_file_becomes_failure(tmp_path):
    report = run_check("braiding", {"rmatrix": str(tmp_path / "absent.json")})
    assert report.status == STATUS_FAIL
    assert "not found" in report.witness


def test_not_applicable_check_fails_with_reason():
    report = run_check("shift-isomorphism", {"family": "flip", "n": 2})
    assert report.status == STATUS_FAIL


def test_log_func_receives_progress():
    messages = []
    run_check("capelli", {"n": 2}, messages.append)
    assert messages[0].startswith("capelli")
    assert "pass" in messages[-1]


def test_empty_suite():
    assert run_suite([]) == []


def test_explicit_suite_with_overrides():
    reports = run_suite([("evaluate-sites", {"n": 2})], {"sites": "1,3"})
    assert reports[0].passed
    assert reports[0].params["sites"] == "1,3"


def test_suite_level_names():
    assert suite_entries("quick") == QUICK_SUITE
    with pytest.raises(ValueError):
        suite_entries("medium")


def test_main_lists_checks(capsys):
    assert main(["--list"]) == EXIT_OK
    assert "cayley-hamilton" in capsys.readouterr().out.split()


def test_main_unknown_check(capsys):
    assert main(["--check", "nope"]) == EXIT_USAGE
    assert "unknown check" in capsys.readouterr().err


def test_main_prints_json_lines(capsys, tmp_path):
    out = tmp_path / "reports.jsonl"
    code = main(["--check", "capelli", "--n", "2", "--out", str(out)])
    assert code == EXIT_OK
    record = json.loads(capsys.readouterr().out.strip())
    assert record["check"] == "capelli" and record["status"] == "pass"
    assert out.exists()
