"""Pass/fail bookkeeping shared by the verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

#: failures kept per check; the count is always exact
MAX_DETAILS = 10


@dataclass
class Check:
    name: str
    total: int = 0
    failed: int = 0
    details: list[Any] = field(default_factory=list)

    def record(self, ok: bool, detail: Any = None) -> bool:
        self.total += 1
        if not ok:
            self.failed += 1
            if len(self.details) < MAX_DETAILS:
                self.details.append(detail)
        return ok

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def merge(self, other: "Check") -> None:
        self.total += other.total
        self.failed += other.failed
        room = MAX_DETAILS - len(self.details)
        self.details.extend(other.details[:room])

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: {self.total - self.failed}/{self.total}"
        if self.details:
            text += f" first failures {self.details[:3]}"
        return text

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "total": self.total,
            "failed": self.failed,
            "details": [repr(d) for d in self.details],
        }


@dataclass
class Report:
    title: str
    checks: dict[str, Check] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    resource_limited: bool = False

    def check(self, name: str) -> Check:
        if name not in self.checks:
            self.checks[name] = Check(name)
        return self.checks[name]

    def merge(self, other: "Report") -> None:
        for name, c in other.checks.items():
            self.check(name).merge(c)
        self.notes.extend(other.notes)
        self.resource_limited |= other.resource_limited

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks.values())

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks.values()] + [f"note: {n}" for n in self.notes]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "resource_limited": self.resource_limited,
            "checks": [c.to_dict() for c in self.checks.values()],
            "notes": list(self.notes),
        }
