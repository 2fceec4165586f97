"""Check results and the aggregate JSON report."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-budget"
STATUSES = (PASS, FAIL, SKIPPED)

SCHEMA_VERSION = 1


def to_jsonable(obj: Any) -> Any:
    """Recursively convert exact values into stable JSON data."""
    from .exactcore.poly import MultiPoly

    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return "infinite"
        return obj
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, MultiPoly):
        return obj.to_str()
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((to_jsonable(v) for v in obj), key=lambda v: json.dumps(v, sort_keys=True))
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return str(obj)


@dataclass
class CheckResult:
    check_id: str
    params: dict
    status: str
    witness: Any = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and self.witness is None:
            raise ValueError(f"failed check {self.check_id} carries no witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def sort_key(self):
        return (self.check_id, json.dumps(to_jsonable(self.params), sort_keys=True))

    def to_json(self) -> dict:
        out = {"check_id": self.check_id, "params": to_jsonable(self.params), "status": self.status}
        if self.witness is not None:
            out["witness"] = to_jsonable(self.witness)
        if self.details:
            out["details"] = to_jsonable(self.details)
        return out


def check(check_id: str, params: dict, ok: bool, witness=None, **details) -> CheckResult:
    """Pass/fail result; a failure without an explicit witness records the details."""
    if ok:
        return CheckResult(check_id, params, PASS, None, details)
    if witness is None:
        witness = details or "check failed"
    return CheckResult(check_id, params, FAIL, witness, details)


@dataclass
class VerificationReport:
    results: list[CheckResult] = field(default_factory=list)

    def add(self, r: CheckResult) -> CheckResult:
        self.results.append(r)
        return r

    def extend(self, other: "VerificationReport | list[CheckResult]") -> None:
        self.results.extend(other.results if isinstance(other, VerificationReport) else other)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == FAIL]

    @property
    def skipped(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == SKIPPED]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def all_passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    def summary(self) -> dict:
        counts = {s: 0 for s in STATUSES}
        for r in self.results:
            counts[r.status] += 1
        return counts

    def sorted_results(self) -> list[CheckResult]:
        return sorted(self.results, key=CheckResult.sort_key)

    def to_json(self, version: str = "", config: dict | None = None) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool_version": version,
            "config": to_jsonable(config or {}),
            "summary": self.summary(),
            "results": [r.to_json() for r in self.sorted_results()],
        }

    def dumps(self, version: str = "", config: dict | None = None) -> str:
        return json.dumps(self.to_json(version, config), indent=2, sort_keys=True) + "\n"
