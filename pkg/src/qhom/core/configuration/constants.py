"""Constants used throughout the configuration subsystem."""

from __future__ import annotations

import logging
import os
from pathlib import Path

from platformdirs import user_cache_dir, user_config_dir

CONFIG_DIR_ENV_VAR = "QHOM_CONFIG_DIR"


def current_config_file() -> Path:
    """``config.toml`` under ``QHOM_CONFIG_DIR`` or the platform config directory."""
    return Path(os.getenv(CONFIG_DIR_ENV_VAR, user_config_dir("qhom"))) / "config.toml"


CACHE_ENV_VAR = "QHOM_CACHE"
DEFAULT_CACHE_DIR = Path(user_cache_dir("qhom"))

DEFAULT_VERBOSITY = "quiet"
VERBOSITY_ENV_VAR = "QHOM_LOG_LEVEL"
VERBOSITY_PRESETS = {
    "quiet": logging.WARNING,
    "standard": logging.INFO,
    "verbose": logging.DEBUG,
}

DEFAULT_BUDGET = 10_000
DEFAULT_JOBS = 1
# |Q|^(n_max + 1) above this refuses to run at all.
DEFAULT_MEMORY_GUARD = 2_000_000
# |Q|^(n + 1) above this needs --force.
DEFAULT_DEGREE_CAP = 20_000
DEFAULT_SAMPLE_SEED = 20160817
