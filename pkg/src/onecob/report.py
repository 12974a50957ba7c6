from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a verification run; failures are data, not exceptions."""

    name: str
    checked: int = 0
    passed: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def failed(self) -> int:
        return self.checked - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, **details) -> bool:
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.counterexamples.append(details)
        return ok

    def merge(self, other: Report) -> Report:
        self.checked += other.checked
        self.passed += other.passed
        self.counterexamples.extend(other.counterexamples)
        return self

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "counterexamples": self.counterexamples,
        }
        if self.info:
            out["info"] = self.info
        return out
