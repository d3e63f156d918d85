from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


class LawViolation(ValueError):
    """Raised when an input that must satisfy a law does not."""

    def __init__(self, report: "LawReport"):
        super().__init__(report.summary())
        self.report = report


@dataclass
class LawReport:
    """Outcome of an exhaustive law check.

    ``checked`` counts diagram instances that were evaluated; ``skipped`` lists
    instances that could not be evaluated (missing components outside the
    enumeration universe, out-of-depth grafts, ...).  Skips never turn a pass
    into a failure, but they are always reported.
    """

    law: str
    own_status: str = PASS
    own_counterexample: dict[str, Any] | None = None
    counts: dict[str, Any] = field(default_factory=dict)
    own_checked: int = 0
    skipped: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    children: list["LawReport"] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.own_status == FAIL or any(c.status == FAIL for c in self.children):
            return FAIL
        return self.own_status

    @property
    def counterexample(self) -> dict[str, Any] | None:
        if self.own_counterexample is not None:
            return self.own_counterexample
        for c in self.children:
            if c.status == FAIL:
                return {"in": c.law, **(c.counterexample or {})}
        return None

    @property
    def checked(self) -> int:
        return self.own_checked + sum(c.checked for c in self.children)

    @checked.setter
    def checked(self, value: int) -> None:
        self.own_checked = value - sum(c.checked for c in self.children)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, **counterexample: Any) -> "LawReport":
        if self.own_status != FAIL:
            self.own_status = FAIL
            self.own_counterexample = counterexample
        return self

    def mark_skipped(self, reason: str) -> "LawReport":
        """The whole check could not run (budget, size cap)."""
        self.own_status = SKIPPED
        self.skipped.append(reason)
        return self

    def add(self, child: "LawReport") -> "LawReport":
        self.children.append(child)
        return child

    def skip(self, reason: str) -> None:
        self.skipped.append(reason)

    def all_skipped(self) -> list[str]:
        out = list(self.skipped)
        for c in self.children:
            out.extend(f"{c.law}: {s}" for s in c.all_skipped())
        return out

    def find(self, law: str) -> "LawReport | None":
        if self.law == law:
            return self
        for c in self.children:
            hit = c.find(law)
            if hit is not None:
                return hit
        return None

    def summary(self) -> str:
        line = f"[{self.status.upper()}] {self.law} ({self.checked} instances"
        if self.skipped:
            line += f", {len(self.skipped)} skipped"
        line += ")"
        if self.counts:
            line += " " + ", ".join(f"{k}={v}" for k, v in self.counts.items())
        if self.counterexample:
            line += f"\n    counterexample: {self.counterexample}"
        return line

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [pad + self.summary().replace("\n", "\n" + pad)]
        for note in self.notes:
            lines.append(pad + "  note: " + note)
        for c in self.children:
            lines.append(c.render(indent + 1))
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"law": self.law, "status": self.status, "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.counts:
            out["counts"] = self.counts
        if self.skipped:
            out["skipped"] = self.skipped
        if self.notes:
            out["notes"] = self.notes
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=str)


def require(report: LawReport) -> LawReport:
    if not report.ok:
        raise LawViolation(report)
    return report
