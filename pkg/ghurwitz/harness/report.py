"""Suite results: per-instance verdicts and their aggregate."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Literal

Status = Literal["pass", "fail", "inconclusive", "skipped", "recorded"]

#: Statuses that count towards the inconclusive share.
_ASSESSED: tuple[Status, ...] = ("pass", "fail", "inconclusive")


@dataclass(frozen=True)
class InstanceResult:
    """Outcome of one generated instance.

    Attributes:
        index: Position in the suite; reports keep this order.
        label: Short instance name.
        status: ``pass`` / ``fail`` / ``inconclusive`` for asserted instances,
            ``skipped`` for excluded ones and ``recorded`` for instances whose
            hypotheses fail (reported, not asserted).
        expected: The verdict the instance was built to have, if known.
        checks: Serialized verdicts of every check that ran.
        witness: Machine-readable evidence for a failure or negative verdict.
        note: Human-readable diagnostic.
    """

    index: int
    label: str
    status: Status
    expected: bool | None = None
    checks: dict[str, Any] = field(default_factory=dict)
    witness: dict[str, Any] | None = None
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "label": self.label,
            "status": self.status,
            "expected": self.expected,
            "checks": self.checks,
            "witness": self.witness,
            "note": self.note,
        }


@dataclass(frozen=True)
class HarnessReport:
    """Aggregate of a suite run.

    ``passed`` holds when no instance failed and the share of inconclusive
    instances among the asserted ones is at most ``max_inconclusive``.
    """

    suite: str
    instances: tuple[InstanceResult, ...]
    config: dict[str, Any] = field(default_factory=dict)
    max_inconclusive: float = 0.02

    def count(self, status: Status) -> int:
        return sum(1 for r in self.instances if r.status == status)

    @property
    def inconclusive_share(self) -> float:
        assessed = sum(1 for r in self.instances if r.status in _ASSESSED)
        return self.count("inconclusive") / assessed if assessed else 0.0

    @property
    def passed(self) -> bool:
        return self.count("fail") == 0 and self.inconclusive_share <= self.max_inconclusive

    @property
    def failures(self) -> list[InstanceResult]:
        return [r for r in self.instances if r.status == "fail"]

    def summary(self) -> dict[str, int]:
        return {
            status: self.count(status)
            for status in ("pass", "fail", "inconclusive", "skipped", "recorded")
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "pass": self.passed,
            "summary": self.summary(),
            "inconclusive_share": self.inconclusive_share,
            "config": self.config,
            "instances": [r.to_dict() for r in self.instances],
        }

    def to_json(self) -> str:
        """Canonical JSON: sorted keys, no timestamps."""
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)
