"""Structured residual reports and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from . import __version__

SCHEMA = "omega3rb/1"
MAX_WITNESSES = 10

WINDOW_NOTE = (
    "statements quantified over all integers were checked on the finite "
    "window only"
)


@dataclass
class ResidualReport:
    window: Tuple[int, int]
    checked: int = 0
    skipped: int = 0
    failed: int = 0
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    skipped_examples: List[Dict[str, Any]] = field(default_factory=list)
    notes: List[str] = field(default_factory=lambda: [WINDOW_NOTE])

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def record_pass(self) -> None:
        self.checked += 1

    def record_failure(self, witness: Dict[str, Any]) -> None:
        self.checked += 1
        self.failed += 1
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(witness)

    def record_skip(self, detail: Dict[str, Any]) -> None:
        self.skipped += 1
        if len(self.skipped_examples) < MAX_WITNESSES:
            self.skipped_examples.append(detail)

    def merge(self, other: "ResidualReport") -> None:
        self.checked += other.checked
        self.skipped += other.skipped
        self.failed += other.failed
        room = MAX_WITNESSES - len(self.witnesses)
        self.witnesses.extend(other.witnesses[:room])
        room = MAX_WITNESSES - len(self.skipped_examples)
        self.skipped_examples.extend(other.skipped_examples[:room])
        for note in other.notes:
            if note not in self.notes:
                self.notes.append(note)

    def to_json(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "window": list(self.window),
            "counts": {"checked": self.checked, "skipped": self.skipped, "failed": self.failed},
            "witnesses": self.witnesses,
            "skipped_examples": self.skipped_examples,
            "approximation_notes": list(self.notes),
        }


def envelope(command: str, config: Dict[str, Any], body: Dict[str, Any], notes: Optional[List[str]] = None) -> Dict[str, Any]:
    """Wrap a command result in the versioned report envelope."""
    out = {
        "schema": SCHEMA,
        "tool_version": __version__,
        "command": command,
        "config": config,
    }
    out.update(body)
    merged = list(body.get("approximation_notes", []))
    for note in notes or []:
        if note not in merged:
            merged.append(note)
    if WINDOW_NOTE not in merged:
        merged.insert(0, WINDOW_NOTE)
    out["approximation_notes"] = merged
    return out
