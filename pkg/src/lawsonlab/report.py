"""Verification-report records with deterministic JSON serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1


def _plain(value):
    """Coerce numpy scalars and containers to built-in JSON-friendly types."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, bool):
        return value
    if hasattr(value, "item"):
        return value.item()
    return value


@dataclass
class ReportEntry:
    """One named check: pass holds exactly when metric <= tolerance."""

    check_id: str
    params: dict
    metric: float
    tolerance: float

    def __post_init__(self) -> None:
        self.params = _plain(self.params)
        self.metric = float(self.metric)
        self.tolerance = float(self.tolerance)

    @property
    def passed(self) -> bool:
        return bool(self.metric <= self.tolerance)

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "metric": self.metric,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    suite: str
    seed: int
    version: str
    node_count: int
    node_count_y: int
    fd_step: float
    entries: list[ReportEntry] = field(default_factory=list)

    def extend(self, entries: list[ReportEntry]) -> None:
        self.entries.extend(entries)

    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failed_ids(self) -> list[str]:
        return [e.check_id for e in sorted(self.entries, key=lambda e: e.check_id) if not e.passed]

    def to_json(self) -> str:
        ids = [e.check_id for e in self.entries]
        if len(ids) != len(set(ids)):
            raise ValueError("duplicate check ids in report")
        payload = {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "seed": self.seed,
            "version": self.version,
            "node_count": self.node_count,
            "node_count_y": self.node_count_y,
            "fd_step": self.fd_step,
            # Sorted entries keep diffs between runs reproducible.
            "entries": [e.to_dict() for e in sorted(self.entries, key=lambda e: e.check_id)],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(self.to_json())
