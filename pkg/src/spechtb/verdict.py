"""Classifier outcomes."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any


class Outcome(enum.Enum):
    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"
    UNKNOWN = "Unknown"
    UNSUPPORTED = "Unsupported"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    reason: str | None = None
    witness: Any = None

    @classmethod
    def of(cls, irreducible: bool, witness=None) -> "Verdict":
        return cls(Outcome.IRREDUCIBLE if irreducible else Outcome.REDUCIBLE, witness=witness)

    @property
    def irreducible(self) -> bool:
        return self.outcome is Outcome.IRREDUCIBLE

    @property
    def decided(self) -> bool:
        return self.outcome in (Outcome.IRREDUCIBLE, Outcome.REDUCIBLE)

    def __eq__(self, other):
        # witnesses and reasons are commentary; verdicts compare by outcome
        if isinstance(other, Verdict):
            return self.outcome is other.outcome
        if isinstance(other, Outcome):
            return self.outcome is other
        return NotImplemented

    def __hash__(self):
        return hash(self.outcome)

    def __str__(self):
        return f"{self.outcome.value}({self.reason})" if self.reason else self.outcome.value


IRREDUCIBLE = Verdict(Outcome.IRREDUCIBLE)
REDUCIBLE = Verdict(Outcome.REDUCIBLE)
