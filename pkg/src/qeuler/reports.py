"""Result records produced by the identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .multipoly import MPoly


@dataclass(frozen=True)
class Report:
    """Outcome of one identity check at one (n, r).

    ``note`` is used for documented discrepancies: known defects in a
    reference formula that are expected and do not count as failures.
    """

    identity: str
    n: int
    r: int
    passed: bool
    residual: Optional[MPoly] = None
    note: str = ""
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "n": self.n,
            "r": self.r,
            "pass": self.passed,
            "residual": (self.residual or MPoly()).to_json(),
        }
        if self.note:
            out["note"] = self.note
        if self.details:
            out["details"] = self.details
        return out

    def sort_key(self):
        return (self.identity, self.n, self.r)


def residual_report(identity: str, n: int, r: int, lhs, rhs, note: str = "") -> Report:
    res = MPoly._coerce(lhs) - MPoly._coerce(rhs)
    return Report(identity, n, r, res.is_zero(), res, note)
