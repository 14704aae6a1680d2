"""Check reports: the verdict structure returned by every trusted checker.

A report never hides why it rejected: each concrete identity, degree, or
divisibility condition tested is recorded with its outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Condition:
    """One concrete condition tested while checking a certificate."""

    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class CheckReport:
    """Overall verdict plus every condition that was tested."""

    ok: bool
    conditions: tuple[Condition, ...]

    @classmethod
    def from_conditions(cls, conditions: Iterable[Condition]) -> CheckReport:
        conds = tuple(conditions)
        return cls(ok=all(c.ok for c in conds), conditions=conds)

    @property
    def failures(self) -> tuple[Condition, ...]:
        return tuple(c for c in self.conditions if not c.ok)

    def prefixed(self, prefix: str) -> tuple[Condition, ...]:
        """The same conditions, renamed to live under ``prefix``."""
        return tuple(
            Condition(f"{prefix}.{c.name}", c.ok, c.detail) for c in self.conditions
        )
