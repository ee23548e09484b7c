import json

import pytest

from src.config.constants import STATUS_FAIL, STATUS_PASS, STATUS_SKIPPED
from src.core.reports import Report, read_reports, reports_to_frame, write_reports
from src.utils.timing import elapsed_millis, format_duration, start_timer


def test_outcome_pass_without_failures():
    report = Report.outcome("braiding", {"n": 2}, [])
    assert report.passed
    assert report.witness is None


def test_outcome_keeps_first_witnesses():
    report = Report.outcome("braiding", {}, [f"w{i}" for i in range(5)])
    assert report.status == STATUS_FAIL
    assert report.witness.startswith("w0; w1; w2")
    assert "5 failures" in report.witness


def test_failing_report_needs_witness():
    with pytest.raises(ValueError):
        Report("braiding", {}, STATUS_FAIL, None)
    with pytest.raises(ValueError):
        Report("braiding", {}, STATUS_PASS, "unexpected")
    with pytest.raises(ValueError):
        Report("braiding", {}, "maybe")


def test_json_line_fields():
    record = json.loads(Report.outcome("capelli", {"n": 3}, ["x != 0"]).to_json())
    assert list(record) == ["check", "params", "status", "witness", "elapsedMillis"]
    assert record["params"] == {"n": 3}


def test_frame_columns():
    frame = reports_to_frame([Report.skipped("capelli", {"n": 2})])
    assert frame.loc[0, "status"] == STATUS_SKIPPED


def test_write_and_read(tmp_path):
    reports = [Report.outcome("capelli", {"n": 2}, []),
               Report.outcome("braiding", {"family": "dj", "n": 2}, ["entry ((1, 1), (1, 1))"])]
    path = tmp_path / "reports.jsonl"
    write_reports(reports, str(path))
    loaded = read_reports(str(path))
    assert [r.check for r in loaded] == ["capelli", "braiding"]
    assert loaded[0].passed and loaded[0].witness is None
    assert loaded[1].witness == "entry ((1, 1), (1, 1))"
    assert loaded[1].params == {"family": "dj", "n": 2}


def test_empty_report_file(tmp_path):
    path = tmp_path / "empty.jsonl"
    write_reports([], str(path))
    assert read_reports(str(path)) == []


def test_missing_report_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_reports(str(tmp_path / "missing.jsonl"))


def test_format_duration():
    assert format_duration(850) == "850ms"
    assert format_duration(2400) == "2.4s"
    assert format_duration(61000) == "1m01s"


def test_elapsed_is_non_negative():
    assert elapsed_millis(start_timer()) >= 0
