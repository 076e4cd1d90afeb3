"""Pass/fail rows shared by the verification reports."""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class CheckRow:
    claim: str
    scope: str
    passed: bool
    detail: str = ""

    def as_record(self) -> dict:
        return asdict(self)


def all_passed(rows) -> bool:
    return all(r.passed for r in rows)


def format_rows(rows) -> str:
    rows = list(rows)
    if not rows:
        return ""
    width = max(len(r.claim) for r in rows)
    scope_w = max(len(r.scope) for r in rows)
    lines = []
    for r in rows:
        mark = "PASS" if r.passed else "FAIL"
        line = f"{mark}  {r.claim:<{width}}  {r.scope:<{scope_w}}"
        if r.detail:
            line += f"  {r.detail}"
        lines.append(line.rstrip())
    return "\n".join(lines)
