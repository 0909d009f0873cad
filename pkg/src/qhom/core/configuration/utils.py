"""Reusable helper functions for configuration services."""

from __future__ import annotations


def coerce_positive_int(
    value: object,
    *,
    minimum: int = 1,
    default: int,
) -> int:
    if value is None or isinstance(value, bool):
        return default
    if isinstance(value, int):
        return value if value >= minimum else default
    if isinstance(value, float):
        return int(value) if value >= minimum else default
    if isinstance(value, str):
        stripped = value.strip().replace("_", "")
        if not stripped:
            return default
        try:
            parsed = int(float(stripped))
        except ValueError:
            return default
        return parsed if parsed >= minimum else default
    return default


def coerce_optional_path(value: object) -> str | None:
    if isinstance(value, str) and value.strip():
        return value.strip()
    return None


def normalize_verbosity_label(label: str | None) -> str | None:
    if not label:
        return None
    normalized = label.strip().lower()
    if normalized in {"quiet", "warn", "warning"}:
        return "quiet"
    if normalized in {"standard", "info", "default"}:
        return "standard"
    if normalized in {"verbose", "debug"}:
        return "verbose"
    return None
