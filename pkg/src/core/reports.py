"""
Verification reports and their JSON-lines form.
"""
import json
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from ..config.constants import REPORT_FIELDS, STATUS_FAIL, STATUS_PASS, STATUS_SKIPPED
from ..utils.timing import elapsed_millis


@dataclass
class Report:
    """Outcome of one verification; a failing report always carries a witness."""

    check: str
    params: Dict[str, Any] = field(default_factory=dict)
    status: str = STATUS_PASS
    witness: Optional[str] = None
    elapsed_millis: int = 0

    def __post_init__(self):
        if self.status not in (STATUS_PASS, STATUS_FAIL, STATUS_SKIPPED):
            raise ValueError(f"unknown report status '{self.status}'.")
        if (self.status == STATUS_FAIL) != bool(self.witness):
            raise ValueError("a report has a witness exactly when it fails.")

    @classmethod
    def outcome(cls, check: str, params: Dict[str, Any], failures: Iterable[str],
                started: Optional[float] = None) -> "Report":
        """Pass if `failures` is empty, otherwise fail with the first few witnesses."""
        failures = [f for f in failures if f]
        elapsed = elapsed_millis(started) if started is not None else 0
        if not failures:
            return cls(check, dict(params), STATUS_PASS, None, elapsed)
        witness = "; ".join(failures[:3])
        if len(failures) > 3:
            witness += f"; ... ({len(failures)} failures)"
        return cls(check, dict(params), STATUS_FAIL, witness, elapsed)

    @classmethod
    def skipped(cls, check: str, params: Dict[str, Any]) -> "Report":
        return cls(check, dict(params), STATUS_SKIPPED)

    @property
    def passed(self) -> bool:
        return self.status == STATUS_PASS

    def to_record(self) -> Dict[str, Any]:
        return dict(zip(REPORT_FIELDS, (self.check, self.params, self.status,
                                        self.witness, self.elapsed_millis)))

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=False)

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "Report":
        return cls(record["check"], dict(record.get("params") or {}), record["status"],
                   record.get("witness"), int(record.get("elapsedMillis", 0)))


def reports_to_frame(reports: List[Report]) -> pd.DataFrame:
    return pd.DataFrame([r.to_record() for r in reports], columns=list(REPORT_FIELDS))


def write_reports(reports: List[Report], path: str) -> None:
    """Write one JSON record per report to `path`."""
    frame = reports_to_frame(reports)
    if frame.empty:
        with open(path, "w", encoding="utf-8"):
            pass
        return
    frame.to_json(path, orient="records", lines=True)


def read_reports(path: str) -> List[Report]:
    """
    Load reports written by write_reports.

    Raises:
        FileNotFoundError: If the file does not exist.
    """
    if not os.path.exists(path):
        raise FileNotFoundError(f"'{path}' not found.")
    if os.path.getsize(path) == 0:
        return []
    frame = pd.read_json(path, orient="records", lines=True, dtype=False).astype(object)
    records = frame.where(pd.notnull(frame), None).to_dict(orient="records")
    return [Report.from_record(r) for r in records]
