"""Pass/fail verdicts shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witness: tuple | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class Verdict:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def add(self, name, passed, detail="", witness=None):
        self.checks.append(Check(name, bool(passed), detail, witness))

    def extend(self, other: "Verdict", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail, c.witness))

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def lines(self):
        return [c.line() for c in self.checks]

    def to_json(self):
        return {c.name: {"passed": c.passed, "detail": c.detail} for c in self.checks}
