"""Verification reports and their json / csv / text renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field


@dataclass
class Check:
    name: str
    expected: str
    computed: str
    passed: bool | None  # None: skipped

    @property
    def status(self) -> str:
        return {True: "pass", False: "FAIL", None: "skip"}[self.passed]


@dataclass
class VerifyReport:
    family: str
    params: dict[str, str]
    conductor: int
    row: str = ""
    checks: list[Check] = field(default_factory=list)
    hilbert: list[int] = field(default_factory=list)
    growth: str = ""
    elapsed_ms: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def add(self, name: str, expected, computed, passed: bool | None) -> Check:
        chk = Check(name, str(expected), str(computed), passed)
        self.checks.append(chk)
        return chk

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        if not timing:
            d.pop("elapsed_ms")
        return d


def to_json(reports: list[VerifyReport], timing: bool = True) -> str:
    payload = [r.to_dict(timing) for r in reports]
    if len(payload) == 1:
        payload = payload[0]
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def to_csv(reports: list[VerifyReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "params", "row", "check", "status", "expected", "computed"])
    for r in reports:
        params = ";".join(f"{k}={v}" for k, v in sorted(r.params.items()))
        for c in r.checks:
            w.writerow([r.family, params, r.row, c.name, c.status, c.expected, c.computed])
    return buf.getvalue()


def to_text(reports: list[VerifyReport]) -> str:
    lines = []
    for r in reports:
        params = ", ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
        verdict = "PASS" if r.passed else "FAIL"
        lines.append(f"{verdict} {r.family} [{params}] conductor={r.conductor} {r.row}".rstrip())
        for c in r.checks:
            lines.append(f"  {c.status:4} {c.name}: expected {c.expected}, computed {c.computed}")
        if r.hilbert:
            lines.append(f"  hilbert {tuple(r.hilbert)} growth {r.growth or '-'}")
        for n in r.notes:
            lines.append(f"  note: {n}")
    return "\n".join(lines) + "\n"


def render(reports: list[VerifyReport], fmt: str, timing: bool = False) -> str:
    """Timing is off by default so that identical inputs give identical bytes."""
    if fmt == "json":
        return to_json(reports, timing)
    if fmt == "csv":
        return to_csv(reports)
    if fmt == "text":
        return to_text(reports)
    raise ValueError(f"unknown format {fmt!r}")
