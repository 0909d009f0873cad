"""High-level facade for runtime configuration operations."""

from __future__ import annotations

from collections.abc import MutableMapping
from dataclasses import dataclass, fields
from pathlib import Path

from .constants import DEFAULT_CACHE_DIR
from .environment import EnvironmentManager
from .models import QhomConfig, RunDefaults
from .repository import ConfigRepository, TomlConfigRepository


@dataclass(frozen=True)
class SettingSource:
    """One effective setting and the layer it came from (flag, env, file or default)."""

    key: str
    value: object
    source: str


class ConfigManager:
    """Coordinates persistence and environment behavior."""

    def __init__(
        self,
        repository: ConfigRepository | None = None,
        environ: MutableMapping[str, str] | None = None,
    ) -> None:
        self._repository = repository or TomlConfigRepository()
        self._environment = EnvironmentManager(environ)

    @property
    def config_path(self) -> Path | None:
        path = getattr(self._repository, "path", None)
        return path if isinstance(path, Path) else None

    def load(self) -> QhomConfig:
        return self._repository.load()

    # ------------------------------------------------------------------
    # Logging preferences
    # ------------------------------------------------------------------
    def get_logging_verbosity(self) -> str:
        label, _ = self._environment.resolve_verbosity(self._repository.load())
        return label

    def resolve_log_level(self, default: int | None = None) -> int:
        return self._environment.resolve_log_level(self._repository.load(), default)

    # ------------------------------------------------------------------
    # Run defaults
    # ------------------------------------------------------------------
    def get_run_defaults(self) -> RunDefaults:
        return self._repository.load().runs

    def resolve_cache_dir(self, override: str | Path | None = None) -> Path:
        if override is not None:
            return Path(override).expanduser()
        env_value = self._environment.cache_override()
        if env_value:
            return Path(env_value).expanduser()
        configured = self._repository.load().runs.cache_dir
        if configured:
            return Path(configured).expanduser()
        return DEFAULT_CACHE_DIR

    def describe(self) -> list[SettingSource]:
        """Effective settings in display order, each tagged with its source."""
        config = self._repository.load()
        defaults = RunDefaults()
        verbosity, verbosity_source = self._environment.resolve_verbosity(config)
        settings = [SettingSource("verbosity", verbosity, verbosity_source)]

        for item in fields(RunDefaults):
            if item.name == "cache_dir":
                continue
            value = getattr(config.runs, item.name)
            source = "file" if value != getattr(defaults, item.name) else "default"
            settings.append(SettingSource(f"runs.{item.name}", value, source))

        if self._environment.cache_override():
            cache_source = "env"
        elif config.runs.cache_dir:
            cache_source = "file"
        else:
            cache_source = "default"
        settings.append(SettingSource("runs.cache_dir", str(self.resolve_cache_dir()), cache_source))
        return settings
