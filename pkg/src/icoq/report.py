"""Verification reports: checks, statuses and deterministic rendering."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator

SCHEMA = "icoq-report/1"
STATUSES = ("pass", "fail", "flagged")


@dataclass
class Check:
    id: str
    cite: str
    status: str
    expected: str
    computed: str
    elapsed_ms: float = 0.0
    note: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def as_dict(self, timing: bool = True) -> dict:
        d = {"id": self.id, "cite": self.cite, "status": self.status,
             "expected": self.expected, "computed": self.computed,
             "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    artifacts: dict[str, str] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "fail" if any(c.status == "fail" for c in self.checks) else "pass"

    @property
    def flagged(self) -> list[Check]:
        return [c for c in self.checks if c.status == "flagged"]

    def extend(self, other: "VerificationReport", prefix: str | None = None) -> None:
        for c in other.checks:
            cid = f"{prefix}.{c.id}" if prefix else c.id
            self.checks.append(Check(cid, c.cite, c.status, c.expected, c.computed,
                                     c.elapsed_ms, c.note))
        for k, v in other.artifacts.items():
            self.artifacts[f"{prefix}.{k}" if prefix else k] = v

    def as_dict(self, timing: bool = True) -> dict:
        d = {"schema": SCHEMA, "suite": self.suite, "status": self.status,
             "checks": [c.as_dict(timing) for c in self.checks]}
        if self.artifacts:
            d["artifacts"] = dict(sorted(self.artifacts.items()))
        return d


class SuiteBuilder:
    """Collects checks for one suite; ``timed`` measures the enclosed block."""

    def __init__(self, suite: str):
        self.report = VerificationReport(suite)
        self._t0 = time.perf_counter()

    @contextmanager
    def timed(self) -> Iterator[None]:
        self._t0 = time.perf_counter()
        yield

    def _elapsed(self) -> float:
        now = time.perf_counter()
        ms = (now - self._t0) * 1000
        self._t0 = now
        return ms

    def add(self, cid: str, cite: str, ok: bool, expected, computed, note: str = "",
            flag: bool = False) -> Check:
        status = "pass" if ok else ("flagged" if flag else "fail")
        c = Check(cid, cite, status, str(expected), str(computed), self._elapsed(), note)
        self.report.checks.append(c)
        return c

    def equal(self, cid: str, cite: str, expected, computed, note: str = "") -> Check:
        return self.add(cid, cite, expected == computed, expected, computed, note)

    def flag_unless(self, cid: str, cite: str, ok: bool, expected, computed, note: str = "") -> Check:
        return self.add(cid, cite, ok, expected, computed, note, flag=True)


def render_json(r: VerificationReport, timing: bool = True) -> str:
    return json.dumps(r.as_dict(timing), indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def _clip(s: str, width: int) -> str:
    s = " ".join(s.split())
    return s if len(s) <= width else s[: width - 3] + "..."


def render_text(r: VerificationReport, timing: bool = True) -> str:
    widths = (44, 8, 30, 30, 10)
    head = ("CHECK", "STATUS", "EXPECTED", "COMPUTED", "MS")
    lines = [f"suite: {r.suite}   schema: {SCHEMA}   status: {r.status.upper()}"]
    lines.append("  ".join(h.ljust(w) for h, w in zip(head, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for c in r.checks:
        ms = f"{c.elapsed_ms:.1f}" if timing else "0"
        cells = (_clip(c.id, widths[0]), c.status.upper(), _clip(c.expected, widths[2]),
                 _clip(c.computed, widths[3]), ms)
        lines.append("  ".join(x.ljust(w) for x, w in zip(cells, widths)).rstrip())
    counts = {s: sum(1 for c in r.checks if c.status == s) for s in STATUSES}
    lines.append(f"{len(r.checks)} checks: {counts['pass']} pass, {counts['fail']} fail, "
                 f"{counts['flagged']} flagged")
    for k, v in sorted(r.artifacts.items()):
        lines.append(f"[{k}]")
        lines.append(v)
    return "\n".join(lines) + "\n"
