"""Check records and reports shared by the verification suites and the CLI."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .calculus import CircleElement, FormZero, OneForm, TwoForm
from .disc import DiscElement
from .scalar import PoleError, Scalar

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "qdisc verification report",
    "type": "object",
    "required": ["suite", "checks", "passed", "failed"],
    "properties": {
        "suite": {"type": "string"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "paper_ref", "status", "detail"],
                "properties": {
                    "name": {"type": "string"},
                    "paper_ref": {"type": "string"},
                    "status": {"enum": ["pass", "fail"]},
                    "detail": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
        "passed": {"type": "integer", "minimum": 0},
        "failed": {"type": "integer", "minimum": 0},
        "elapsed": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
}


@dataclass
class CheckRecord:
    name: str
    paper_ref: str
    passed: bool
    detail: str = ""
    left: str | None = None
    right: str | None = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        detail = self.detail
        if not self.passed and self.left is not None:
            extra = f"lhs = {self.left}; rhs = {self.right}"
            detail = f"{detail}; {extra}" if detail else extra
        return {"name": self.name, "paper_ref": self.paper_ref,
                "status": self.status, "detail": detail}


@dataclass
class Report:
    suite: str
    checks: list[CheckRecord] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def add(self, record: CheckRecord) -> None:
        self.checks.append(record)

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)
        self.elapsed += other.elapsed

    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> CheckRecord:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self, timing: bool = True) -> dict:
        out = {"suite": self.suite,
               "checks": [c.to_json() for c in self.checks],
               "passed": self.passed, "failed": self.failed}
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2)

    def summary(self) -> str:
        return (f"{self.suite}: {self.passed} passed, {self.failed} failed "
                f"({self.elapsed:.2f}s)")


def leaves(value) -> dict:
    """Flatten a value into ``{position: Scalar}`` (zero entries omitted)."""
    if isinstance(value, Scalar):
        return {(): value} if value else {}
    if isinstance(value, DiscElement):
        return dict(value.terms)
    if isinstance(value, CircleElement):
        return dict(value.terms)
    if isinstance(value, OneForm):
        out = {("w",) + k: c for k, c in value.omega.terms.items()}
        out.update({("ws",) + k: c for k, c in value.omega_star.terms.items()})
        return out
    if isinstance(value, TwoForm):
        return dict(value.coeff.terms)
    if isinstance(value, FormZero):
        return {}
    raise TypeError(f"no scalar leaves for {type(value).__name__}")


def numeric_leaves(value, q0) -> dict:
    out = {}
    for key, c in leaves(value).items():
        v = c.eval_at(q0)
        if v:
            out[key] = v
    return out


def compare(name: str, paper_ref: str, lhs, rhs,
            q_samples: Sequence[Fraction] = ()) -> CheckRecord:
    """Exact comparison of two values, plus optional numeric agreement.

    The numeric channel substitutes each q sample into every coefficient of
    both sides; the record fails if any sample disagrees with the exact
    verdict.
    """
    lhs, rhs = align(lhs, rhs)
    exact = _same(lhs, rhs)
    notes = []
    agree = True
    for q0 in q_samples:
        try:
            numeric = numeric_leaves(lhs, q0) == numeric_leaves(rhs, q0)
        except PoleError:
            notes.append(f"pole at q={q0}")
            continue
        if numeric != exact:
            agree = False
            notes.append(f"numeric verdict at q={q0} disagrees")
    passed = exact and agree
    record = CheckRecord(name, paper_ref, passed, "; ".join(notes))
    if not exact:
        record.left, record.right = str(lhs), str(rhs)
    return record


def align(lhs, rhs):
    """Bring two values to a common kind where that is unambiguous.

    Scalars embed into the algebra, and a zero scalar stands for the zero
    of whatever kind the other side has.
    """
    if isinstance(lhs, Scalar) and isinstance(rhs, DiscElement):
        return DiscElement.scalar(lhs), rhs
    if isinstance(rhs, Scalar) and isinstance(lhs, DiscElement):
        return lhs, DiscElement.scalar(rhs)
    if isinstance(lhs, Scalar) and not lhs and not isinstance(rhs, Scalar):
        return _zero_like(rhs), rhs
    if isinstance(rhs, Scalar) and not rhs and not isinstance(lhs, Scalar):
        return lhs, _zero_like(lhs)
    return lhs, rhs


def _zero_like(value):
    if isinstance(value, DiscElement):
        return DiscElement()
    if isinstance(value, OneForm):
        return OneForm()
    if isinstance(value, TwoForm):
        return TwoForm()
    if isinstance(value, CircleElement):
        return CircleElement()
    if isinstance(value, FormZero):
        return value
    raise TypeError(f"no zero of kind {type(value).__name__}")


def same_kind(lhs, rhs) -> bool:
    lhs, rhs = align(lhs, rhs)
    return type(lhs) is type(rhs)


def _same(lhs, rhs) -> bool:
    return type(lhs) is type(rhs) and leaves(lhs) == leaves(rhs)


def run_checks(suite: str, checks: Iterable[Callable[[], CheckRecord]],
               jobs: int = 1) -> Report:
    """Run independent check thunks; the record order is that of ``checks``."""
    start = time.perf_counter()
    checks = list(checks)
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(lambda f: f(), checks))
    else:
        records = [f() for f in checks]
    report = Report(suite, records)
    report.elapsed = time.perf_counter() - start
    return report
