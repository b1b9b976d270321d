"""Non-witness results shared by the construction front ends."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ExternalConstructionRequired:
    """The object exists but this library cannot build it from its own
    constructions. ``cell`` names the routing case that sent it away."""

    reason: str
    cell: str = ""

    def __str__(self) -> str:
        return f"{self.reason} [{self.cell}]" if self.cell else self.reason


@dataclass(frozen=True)
class NonExistent:
    """The object provably does not exist."""

    reason: str

    def __str__(self) -> str:
        return self.reason
