"""Boolean verdicts that carry their evidence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer plus the witness that justifies it.

    Truth-tests as its boolean value, so ``if is_local(ring): ...`` reads
    naturally while the witness stays available for reports.
    """

    value: bool
    witness: Any = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.value
