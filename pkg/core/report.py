"""
Check records and suite reports.

A suite passes iff none of its checks failed; inconclusive and skipped
checks never count as passes.
"""

import json
from dataclasses import asdict, dataclass, field
from typing import Dict, List

import pandas as pd

STATUSES = ("pass", "fail", "skip", "inconclusive")


@dataclass
class CheckRecord:
    check_id: str
    anchor: str
    status: str
    detail: str = ""
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}, expected one of {STATUSES}")


@dataclass
class SuiteReport:
    suite: str
    field: str
    seed: int
    records: List[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> None:
        self.records.append(record)
        self.records.sort(key=lambda r: r.check_id)

    @property
    def status(self) -> str:
        if any(r.status == "fail" for r in self.records):
            return "fail"
        if self.records and all(r.status == "pass" for r in self.records):
            return "pass"
        return "incomplete"

    @property
    def exit_code(self) -> int:
        return 1 if self.status == "fail" else 0

    def counts(self) -> Dict[str, int]:
        counts = self.to_frame()["status"].value_counts() if self.records else pd.Series(dtype=int)
        return {s: int(counts.get(s, 0)) for s in STATUSES}

    def to_dict(self, with_timing: bool = True) -> dict:
        records = []
        for r in sorted(self.records, key=lambda r: r.check_id):
            item = asdict(r)
            if with_timing:
                item["elapsed_ms"] = round(r.elapsed_ms, 3)
            else:
                item.pop("elapsed_ms")
            records.append(item)
        return {
            "suite": self.suite,
            "field": self.field,
            "seed": self.seed,
            "status": self.status,
            "counts": self.counts(),
            "checks": records,
        }

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_dict(with_timing), indent=2, sort_keys=True)

    def to_frame(self) -> pd.DataFrame:
        """One row per check, sorted by check_id."""
        frame = pd.DataFrame([asdict(r) for r in self.records], columns=["check_id", "status", "elapsed_ms", "anchor", "detail"])
        return frame.sort_values("check_id").reset_index(drop=True)

    def to_table(self) -> str:
        frame = self.to_frame()
        if frame.empty:
            return f"{self.suite}: no checks"
        frame["elapsed_ms"] = frame["elapsed_ms"].map(lambda v: f"{v:.1f}")
        frame["detail"] = frame["detail"].str.slice(0, 60)
        return frame[["check_id", "status", "elapsed_ms", "detail"]].to_string(index=False)


def merge_reports(reports: List[SuiteReport]) -> dict:
    """JSON-ready summary of several suites run together."""
    return {
        "status": "fail" if any(r.status == "fail" for r in reports) else
                  "pass" if all(r.status == "pass" for r in reports) else "incomplete",
        "suites": [r.to_dict() for r in reports],
    }
