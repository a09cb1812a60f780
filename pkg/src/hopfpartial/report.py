"""Verification reports: named checks with the first counterexample found."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable


class VerificationError(Exception):
    """An identity that must hold did not; carries the failing report."""

    def __init__(self, report: "Report"):
        self.report = report
        bad = report.first_failure()
        msg = f"{report.title}: {bad.id} fails" if bad else report.title
        if bad and bad.counterexample:
            msg += " at (" + ", ".join(bad.counterexample) + ")"
        super().__init__(msg)


@dataclass
class Check:
    id: str
    passed: bool
    counterexample: tuple | None = None
    detail: str = ""
    tuples: int = 0

    def line(self) -> str:
        s = f"[{'PASS' if self.passed else 'FAIL'}] {self.id}"
        if self.tuples:
            s += f" ({self.tuples} tuples)"
        if self.counterexample:
            s += " at (" + ", ".join(self.counterexample) + ")"
        if self.detail:
            s += f": {self.detail}"
        return s


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    payload: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks: Iterable[Check], prefix: str = "") -> None:
        for c in checks:
            if prefix:
                c = Check(prefix + c.id, c.passed, c.counterexample, c.detail, c.tuples)
            self.checks.append(c)

    def merge(self, other: "Report", prefix: str = "") -> None:
        self.extend(other.checks, prefix)
        self.notes.extend(other.notes)
        for k, v in other.payload.items():
            self.payload.setdefault(prefix + k, v)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def get(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def to_text(self) -> str:
        lines = [f"== {self.title}"]
        lines += [c.line() for c in self.checks]
        for k, v in self.payload.items():
            lines.append(f"  {k} = {_render(v)}")
        lines += [f"  note: {n}" for n in self.notes]
        lines.append(f"summary: {'PASS' if self.passed else 'FAIL'} "
                     f"({sum(c.passed for c in self.checks)}/{len(self.checks)} checks)")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "summary": "pass" if self.passed else "fail",
            "checks": [{"id": c.id, "status": "pass" if c.passed else "fail",
                        "counterexample": list(c.counterexample) if c.counterexample else None,
                        "tuples": c.tuples, "detail": c.detail or None}
                       for c in self.checks],
            "payload": _jsonable(self.payload),
            "notes": list(self.notes),
            "elapsed_seconds": round(self.elapsed, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def require(self) -> "Report":
        if not self.passed:
            raise VerificationError(self)
        return self


def _render(v) -> str:
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_render(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_render(x) for x in v) + "]"
    return str(v)


def sweep(check_id: str, tuples: Iterable, holds: Callable, label: Callable = None,
          detail: str = "") -> Check:
    """Run ``holds`` over every tuple; stop at the first failure."""
    n = 0
    for t in tuples:
        n += 1
        if not holds(*t):
            ce = label(*t) if label else tuple(str(x) for x in t)
            return Check(check_id, False, tuple(ce), detail, n)
    return Check(check_id, True, None, detail, n)


class Timer:
    def __init__(self, report: Report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed += time.perf_counter() - self.t0
        return False
