"""Service layer used by CLI handlers."""

from __future__ import annotations
