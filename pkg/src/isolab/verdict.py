from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """A boolean answer plus whatever certifies it.

    Truthiness follows ``holds`` so a verdict can be used directly in ``if``.
    ``confidence`` is ``"exact"`` for real-field decisions and
    ``"discretized(m)"`` when the complex unimodular set was sampled.
    """

    holds: bool
    witness: Any = None
    confidence: str = "exact"
    note: str = ""

    def __bool__(self) -> bool:
        return bool(self.holds)
