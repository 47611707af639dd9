from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .certify import DEFAULT_VERIFY_CAP
from .factor import DEFAULT_BUDGET
from .rooted import TOWER_VERTEX_CAP


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QWALK_JOBS", "1")))
    except ValueError:
        return 1


@dataclass
class RunConfig:
    graphs: list[str] = field(default_factory=list)
    files: list[Path] = field(default_factory=list)
    fmt: str = "json"
    jobs: int = field(default_factory=default_jobs)
    budget: int = DEFAULT_BUDGET
    tower_cap: int = TOWER_VERTEX_CAP
    verify_cap: int = DEFAULT_VERIFY_CAP
    probe_k: tuple[int, ...] = ()

    def __post_init__(self):
        if self.fmt not in ("json", "table"):
            raise ValueError(f"unknown output format {self.fmt!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if min(self.budget, self.tower_cap, self.verify_cap) <= 0:
            raise ValueError("budget and caps must be positive")
