from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Entry:
    name: str
    order: int
    passed: bool
    mismatch: int | None = None

    def __post_init__(self):
        if self.passed and self.mismatch is not None:
            raise ValueError("passing entry cannot carry a mismatch index")
        if not self.passed and self.mismatch is None:
            raise ValueError("failing entry needs a mismatch index")

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class VerificationReport:
    entries: list[Entry] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(e.passed for e in self.entries)

    def add(self, name, order, mismatch):
        self.entries.append(Entry(name, order, mismatch is None, mismatch))

    def __getitem__(self, name) -> Entry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def names(self):
        return [e.name for e in self.entries]

    def to_json(self) -> dict:
        return {
            "overall": "pass" if self.overall else "fail",
            "entries": [
                {"name": e.name, "order": e.order, "status": e.status,
                 "first_mismatch": e.mismatch}
                for e in self.entries
            ],
        }

    def to_text(self) -> str:
        width = max([len(e.name) for e in self.entries] + [8])
        lines = [f"{'identity':<{width}}  order  status  first-mismatch"]
        for e in self.entries:
            mm = "-" if e.mismatch is None else str(e.mismatch)
            lines.append(f"{e.name:<{width}}  {e.order:>5}  {e.status:<6}  {mm}")
        lines.append(f"overall: {'pass' if self.overall else 'fail'}")
        return "\n".join(lines)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)
