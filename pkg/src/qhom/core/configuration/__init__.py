"""
Runtime configuration package for qhom.

Exposes a cohesive facade for caller code while keeping persistence and
environment concerns segmented by module.
"""

from __future__ import annotations

from .constants import (
    CACHE_ENV_VAR,
    CONFIG_DIR_ENV_VAR,
    DEFAULT_VERBOSITY,
    VERBOSITY_ENV_VAR,
    VERBOSITY_PRESETS,
)
from .manager import ConfigManager, SettingSource
from .models import QhomConfig, RunDefaults
from .repository import ConfigRepository, InMemoryConfigRepository, TomlConfigRepository

__all__ = [
    "CACHE_ENV_VAR",
    "CONFIG_DIR_ENV_VAR",
    "ConfigManager",
    "ConfigRepository",
    "DEFAULT_VERBOSITY",
    "InMemoryConfigRepository",
    "QhomConfig",
    "RunDefaults",
    "SettingSource",
    "TomlConfigRepository",
    "VERBOSITY_ENV_VAR",
    "VERBOSITY_PRESETS",
]
