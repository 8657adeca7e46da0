"""Pass/fail bookkeeping shared by the axiom and identity verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List


@dataclass
class CheckItem:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class CheckReport:
    """An ordered list of named exact checks with an overall verdict."""

    title: str
    items: List[CheckItem] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.items.append(CheckItem(name, bool(ok), detail))
        return bool(ok)

    def extend(self, other: "CheckReport") -> None:
        self.items.extend(other.items)

    @property
    def ok(self) -> bool:
        return all(it.ok for it in self.items)

    def failures(self) -> List[CheckItem]:
        return [it for it in self.items if not it.ok]

    def render(self) -> str:
        width = max((len(it.name) for it in self.items), default=4)
        lines = [f"{self.title}"]
        for it in self.items:
            mark = "pass" if it.ok else "FAIL"
            extra = f"  ({it.detail})" if it.detail else ""
            lines.append(f"  {it.name.ljust(width)}  {mark}{extra}")
        return "\n".join(lines)

    def first_failure(self) -> str:
        bad = self.failures()
        return bad[0].name if bad else ""
