from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Stats:
    predicate_calls: int = 0
    subroutine_calls: int = 0
    wall_ms: float = 0.0

    def as_dict(self) -> dict:
        return {
            "predicate_calls": self.predicate_calls,
            "subroutine_calls": self.subroutine_calls,
            "wall_ms": self.wall_ms,
        }


@dataclass
class DepthResult:
    depth: int
    algorithm: str
    witness: object = None
    stats: Stats = field(default_factory=Stats)
