"""Shared bootstrap helpers for CLI commands."""

from __future__ import annotations

from rich.console import Console

from qhom.core.configuration import VERBOSITY_PRESETS, ConfigManager
from qhom.core.logging import configure_logging

from .context import CliContext

_forced_verbosity: str | None = None


def force_verbosity(label: str | None) -> None:
    """Override the configured verbosity for the current invocation."""

    global _forced_verbosity
    _forced_verbosity = label


def bootstrap_runtime() -> CliContext:
    """Configure logging, load configuration, and return a CLI context."""

    # A fresh manager per invocation so QHOM_CONFIG_DIR and QHOM_* changes apply.
    config_manager = ConfigManager()
    if _forced_verbosity is not None:
        log_level = VERBOSITY_PRESETS[_forced_verbosity]
    else:
        log_level = config_manager.resolve_log_level()
    configure_logging(level=log_level)

    console = Console()
    return CliContext(console=console, config=config_manager)
