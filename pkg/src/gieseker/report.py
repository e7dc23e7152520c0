"""Verification reports: a list of named checks serialised to deterministic JSON."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


@dataclass
class Check:
    id: str
    anchor: str  # the claim being checked, in words
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": "pass" if self.passed else "fail",
            "witness": self.witness,
        }


@dataclass
class Report:
    suite: str
    seed: int | None = None
    checks: list = field(default_factory=list)
    elapsed_ms: int = 0

    def add(self, id: str, anchor: str, passed: bool, **witness) -> Check:
        c = Check(id, anchor, bool(passed), witness)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.anchor, c.passed, c.witness))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.id)],
            "elapsed_ms": self.elapsed_ms,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def summary_lines(self) -> list[str]:
        return [f"{'PASS' if c.passed else 'FAIL'}  {c.id}  ({c.anchor})"
                for c in sorted(self.checks, key=lambda c: c.id)]


class Timer:
    """Context manager filling ``report.elapsed_ms`` unless timing is disabled."""

    def __init__(self, report: Report, enabled: bool = True):
        self.report = report
        self.enabled = enabled

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.report.elapsed_ms = int((time.perf_counter() - self.start) * 1000) if self.enabled else 0
        return False
