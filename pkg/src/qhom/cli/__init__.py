"""Command line interface for qhom."""

from __future__ import annotations

from .app import app, build_app

__all__ = ["app", "build_app"]
