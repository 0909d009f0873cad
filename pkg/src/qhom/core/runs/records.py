"""Run configuration and result records shared by the engine, cache and CLI."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any

from qhom.core.chains import ComplexTheory
from qhom.core.configuration.constants import (
    DEFAULT_BUDGET,
    DEFAULT_DEGREE_CAP,
    DEFAULT_JOBS,
    DEFAULT_MEMORY_GUARD,
    DEFAULT_SAMPLE_SEED,
)
from qhom.core.errors import BudgetError, DegreeError
from qhom.core.homology import HomologyGroup, annihilation_exponent

# Part of every cache key; bump when a change can alter computed groups.
ENGINE_VERSION = "1.0.0"

CSV_COLUMNS = ("label", "size", "table_sha256", "theory", "degree", "free_rank", "torsion", "exponent", "ms")


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


@dataclass(frozen=True)
class RunConfig:
    """One homology run: a quandle source, a theory and a degree range."""

    source: str
    theory: ComplexTheory
    n_min: int
    n_max: int
    output: OutputFormat = OutputFormat.TEXT
    budget: int = DEFAULT_BUDGET
    cache_dir: Path | None = None
    jobs: int = DEFAULT_JOBS
    memory_guard: int = DEFAULT_MEMORY_GUARD
    degree_cap: int = DEFAULT_DEGREE_CAP
    sample_seed: int = DEFAULT_SAMPLE_SEED
    force: bool = False

    def __post_init__(self) -> None:
        if self.n_min < 1:
            raise DegreeError(f"degrees start at 1, got {self.n_min}")
        if self.n_max < self.n_min:
            raise DegreeError(f"empty degree range {self.n_min}..{self.n_max}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")

    @property
    def degrees(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def check_size(self, size: int) -> int:
        """
        Refuse runs whose largest basis ``|Q|^(n_max + 1)`` exceeds the guards.

        The memory guard is hard; the degree cap yields to ``force``.
        Returns the estimate.
        """
        estimate = size ** (self.n_max + 1)
        if estimate > self.memory_guard:
            raise BudgetError(
                f"|Q|^{self.n_max + 1} = {estimate} basis tuples exceed the memory guard of "
                f"{self.memory_guard}; try a smaller top degree"
            )
        if estimate > self.degree_cap and not self.force:
            raise BudgetError(
                f"|Q|^{self.n_max + 1} = {estimate} basis tuples exceed the degree cap of "
                f"{self.degree_cap}; pass --force to run anyway"
            )
        return estimate


@dataclass(frozen=True)
class ResultRecord:
    """One computed homology group bound to the exact table it came from."""

    label: str
    size: int
    table_sha256: str
    theory: str
    degree: int
    free_rank: int
    torsion: tuple[int, ...]
    ms: int
    engine_version: str = ENGINE_VERSION

    @classmethod
    def from_group(
        cls,
        *,
        label: str,
        size: int,
        table_sha256: str,
        theory: str,
        degree: int,
        group: HomologyGroup,
        ms: int,
    ) -> ResultRecord:
        return cls(label, size, table_sha256, theory, degree, group.free_rank, group.torsion, ms)

    @property
    def group(self) -> HomologyGroup:
        return HomologyGroup(self.free_rank, self.torsion)

    @property
    def exponent(self) -> int | str:
        return annihilation_exponent(self.group)

    def to_dict(self) -> dict[str, Any]:
        return {
            "quandle": {"label": self.label, "size": self.size, "table_sha256": self.table_sha256},
            "theory": self.theory,
            "degree": self.degree,
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "primary": list(self.group.primary_decomposition()),
            "exponent": self.exponent,
            "ms": self.ms,
            "engine_version": self.engine_version,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ResultRecord:
        quandle = data["quandle"]
        return cls(
            label=str(quandle["label"]),
            size=int(quandle["size"]),
            table_sha256=str(quandle["table_sha256"]),
            theory=str(data["theory"]),
            degree=int(data["degree"]),
            free_rank=int(data["free_rank"]),
            torsion=tuple(int(t) for t in data["torsion"]),
            ms=int(data["ms"]),
            engine_version=str(data.get("engine_version", ENGINE_VERSION)),
        )

    def csv_row(self) -> list[str]:
        return [
            self.label,
            str(self.size),
            self.table_sha256,
            self.theory,
            str(self.degree),
            str(self.free_rank),
            " ".join(str(t) for t in self.torsion),
            str(self.exponent),
            str(self.ms),
        ]
