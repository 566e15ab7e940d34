"""Verification reports shared by the rewriting, homomorphism and matrix checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Check:
    label: str
    passed: bool
    residual: Optional[str] = None
    data: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"label": self.label, "passed": self.passed}
        if self.residual is not None:
            d["residual"] = self.residual
        d.update(self.data)
        return d


@dataclass
class Report:
    kind: str
    subject: str
    checks: List[Check] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    # a report with no checks is a failure: nothing was verified
    allow_empty: bool = False

    @property
    def passed(self) -> bool:
        if not self.checks:
            return self.allow_empty
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, label: str, passed: bool, residual: str | None = None, **data) -> Check:
        c = Check(label, passed, residual, data)
        self.checks.append(c)
        return c

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "subject": self.subject,
            "verdict": self.verdict,
            "checks": [c.to_dict() for c in self.checks],
        }
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def summary(self) -> str:
        n_ok = sum(c.passed for c in self.checks)
        return f"{self.kind} {self.subject}: {self.verdict} ({n_ok}/{len(self.checks)} checks)"

    def render_text(self) -> str:
        lines = [self.summary()]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = f"  [{mark}] {c.label}"
            if c.residual is not None and not c.passed:
                line += f"  residual: {c.residual}"
            lines.append(line)
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def render(reports: List[Report], fmt: str = "text") -> str:
    if fmt == "structured":
        doc = {
            "format": "ncrewrite-report/1",
            "verdict": "pass" if all(r.passed for r in reports) else "fail",
            "reports": [r.to_dict() for r in reports],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False)
    return "\n".join(r.render_text() for r in reports)
