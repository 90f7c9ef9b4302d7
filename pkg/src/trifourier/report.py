"""Uniform pass/fail reporting for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    check_id: str
    ok: bool
    details: str = ""


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    def add(self, check_id: str, ok: bool, details: str = "") -> None:
        self.checks.append(Check(check_id, bool(ok), details))

    def require(self, check_id: str, ok: bool, details: str = "") -> None:
        """Like add, but only records failures with their details."""
        if not ok:
            self.add(check_id, False, details)
        else:
            self.add(check_id, True)

    def extend(self, other: "Report") -> None:
        for c in other.checks:
            self.checks.append(Check(f"{other.suite}:{c.check_id}", c.ok, c.details))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "pass": self.ok,
            "checks": [
                {"id": c.check_id, "status": "pass" if c.ok else "fail", "details": c.details}
                for c in self.checks
            ],
        }

    def summary(self) -> str:
        lines = [
            f"[{'PASS' if c.ok else 'FAIL'}] {c.check_id}" + (f": {c.details}" if c.details else "")
            for c in self.checks
        ]
        lines.append(f"suite {self.suite}: {'PASS' if self.ok else 'FAIL'} ({len(self.checks)} checks)")
        return "\n".join(lines)
