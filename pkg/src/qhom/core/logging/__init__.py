"""
Logging utilities for qhom.

Provides a small facade so callers can import ``configure_logging`` from
``qhom.core.logging`` without depending on the underlying module layout.
"""

from __future__ import annotations

from .config import PROJECT_LOGGER_NAME, build_handler, configure_logging

__all__ = ["PROJECT_LOGGER_NAME", "build_handler", "configure_logging"]
