"""Persistence adapters for qhom configuration."""

from __future__ import annotations

from pathlib import Path
from typing import Protocol

from .constants import current_config_file
from .models import QhomConfig
from .serde import config_from_dict

try:  # Python 3.11+
    import tomllib as tomli  # type: ignore[import-not-found]
except ModuleNotFoundError:  # pragma: no cover - fallback for older interpreters
    import tomli  # type: ignore[no-redef]


class ConfigRepository(Protocol):
    """Abstraction for loading qhom configuration."""

    def load(self) -> QhomConfig:
        ...


class TomlConfigRepository(ConfigRepository):
    """Reads configuration from a TOML file; a missing file means defaults."""

    def __init__(self, path: Path | None = None) -> None:
        self._path = path if path is not None else current_config_file()

    @property
    def path(self) -> Path:
        return self._path

    def load(self) -> QhomConfig:
        if not self._path.exists():
            return QhomConfig()
        with self._path.open("rb") as fh:
            payload = tomli.load(fh)
        return config_from_dict(payload)


class InMemoryConfigRepository(ConfigRepository):
    """Holds a fixed configuration; used by tests and embedding callers."""

    def __init__(self, config: QhomConfig | None = None) -> None:
        self._config = config or QhomConfig()

    def load(self) -> QhomConfig:
        return self._config
