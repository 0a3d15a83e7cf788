"""Verification reports: per-entry pass/fail/flagged with citations.

Reports are deterministic for fixed options: entries are sorted by name
and wall times are omitted unless explicitly requested.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged"


@dataclass
class ReportEntry:
    name: str
    status: str
    paper_ref: str = ""
    residual: str = ""
    note: str = ""
    wall_ms: float = None


@dataclass
class Report:
    suite: str
    entries: list = field(default_factory=list)

    def add(self, name, status, paper_ref="", residual="", note="", wall_ms=None):
        self.entries.append(
            ReportEntry(name, status, paper_ref, residual, note, wall_ms)
        )

    def sorted_entries(self):
        return sorted(self.entries, key=lambda e: e.name)

    @property
    def failed(self):
        return [e for e in self.entries if e.status == FAIL]

    @property
    def flagged(self):
        return [e for e in self.entries if e.status == FLAGGED]

    def counts(self):
        n = {PASS: 0, FAIL: 0, FLAGGED: 0}
        for e in self.entries:
            n[e.status] = n.get(e.status, 0) + 1
        return n


def render_text(reports, show_timings=False, verbose=False):
    lines = []
    total = {PASS: 0, FAIL: 0, FLAGGED: 0}
    for rep in reports:
        c = rep.counts()
        for k, v in c.items():
            total[k] = total.get(k, 0) + v
        lines.append(f"== {rep.suite}: {c[PASS]} pass, {c[FLAGGED]} flagged, "
                     f"{c[FAIL]} fail")
        for e in rep.sorted_entries():
            if e.status == PASS and not verbose:
                continue
            t = f"  [{e.wall_ms:.0f} ms]" if (show_timings and e.wall_ms) else ""
            lines.append(f"  {e.status.upper():7s} {e.name}{t}")
            if e.paper_ref:
                lines.append(f"          ref: {e.paper_ref}")
            if e.residual:
                lines.append(f"          residual: {e.residual}")
            if e.note:
                lines.append(f"          note: {e.note}")
    lines.append(
        f"total: {total[PASS]} pass, {total[FLAGGED]} flagged, "
        f"{total[FAIL]} fail"
    )
    return "\n".join(lines)


def render_json(reports, options=None, show_timings=False):
    out = {
        "options": options or {},
        "suites": [
            {
                "name": rep.suite,
                "counts": rep.counts(),
                "entries": [
                    {
                        "name": e.name,
                        "status": e.status,
                        "paper_ref": e.paper_ref,
                        "residual": e.residual,
                        "note": e.note,
                        "wall_ms": e.wall_ms if show_timings else None,
                    }
                    for e in rep.sorted_entries()
                ],
            }
            for rep in sorted(reports, key=lambda r: r.suite)
        ],
    }
    return json.dumps(out, indent=1, sort_keys=True)


REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["options", "suites"],
    "properties": {
        "options": {"type": "object"},
        "suites": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "counts", "entries"],
                "properties": {
                    "name": {"type": "string"},
                    "counts": {
                        "type": "object",
                        "properties": {
                            "pass": {"type": "integer"},
                            "fail": {"type": "integer"},
                            "flagged": {"type": "integer"},
                        },
                    },
                    "entries": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["name", "status"],
                            "properties": {
                                "name": {"type": "string"},
                                "status": {
                                    "enum": ["pass", "fail", "flagged"]
                                },
                                "paper_ref": {"type": "string"},
                                "residual": {"type": "string"},
                                "note": {"type": "string"},
                                "wall_ms": {
                                    "type": ["number", "null"]
                                },
                            },
                        },
                    },
                },
            },
        },
    },
}
