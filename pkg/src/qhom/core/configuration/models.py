"""Dataclasses describing persisted qhom configuration."""

from __future__ import annotations

from dataclasses import dataclass, field

from .constants import (
    DEFAULT_BUDGET,
    DEFAULT_DEGREE_CAP,
    DEFAULT_JOBS,
    DEFAULT_MEMORY_GUARD,
    DEFAULT_SAMPLE_SEED,
)


@dataclass
class RunDefaults:
    budget: int = DEFAULT_BUDGET
    jobs: int = DEFAULT_JOBS
    memory_guard: int = DEFAULT_MEMORY_GUARD
    degree_cap: int = DEFAULT_DEGREE_CAP
    sample_seed: int = DEFAULT_SAMPLE_SEED
    cache_dir: str | None = None

    def is_default(self) -> bool:
        return self == RunDefaults()


@dataclass
class QhomConfig:
    verbosity: str | None = None
    runs: RunDefaults = field(default_factory=RunDefaults)
