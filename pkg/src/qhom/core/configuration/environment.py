"""Environment adapters for applying configuration at runtime."""

from __future__ import annotations

import os
from collections.abc import MutableMapping

from .constants import CACHE_ENV_VAR, DEFAULT_VERBOSITY, VERBOSITY_ENV_VAR, VERBOSITY_PRESETS
from .models import QhomConfig
from .utils import coerce_optional_path, normalize_verbosity_label


class EnvironmentManager:
    """Thin wrapper around environment access to aid testing and reuse."""

    def __init__(self, environ: MutableMapping[str, str] | None = None) -> None:
        self._environ = environ if environ is not None else os.environ

    def getenv(self, key: str) -> str | None:
        return self._environ.get(key)

    def resolve_verbosity(self, config: QhomConfig) -> tuple[str, str]:
        """Return the verbosity label and the layer that supplied it."""
        label = normalize_verbosity_label(self.getenv(VERBOSITY_ENV_VAR))
        if label is not None:
            return label, "env"
        label = normalize_verbosity_label(config.verbosity)
        if label is not None:
            return label, "file"
        return DEFAULT_VERBOSITY, "default"

    def resolve_log_level(self, config: QhomConfig, default: int | None = None) -> int:
        label, source = self.resolve_verbosity(config)
        if source == "default" and default is not None:
            return default
        return VERBOSITY_PRESETS[label]

    def cache_override(self) -> str | None:
        return coerce_optional_path(self.getenv(CACHE_ENV_VAR))
