"""Serialization helpers for persisted qhom configuration."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Any

from .constants import (
    DEFAULT_BUDGET,
    DEFAULT_DEGREE_CAP,
    DEFAULT_JOBS,
    DEFAULT_MEMORY_GUARD,
    DEFAULT_SAMPLE_SEED,
)
from .models import QhomConfig, RunDefaults
from .utils import coerce_optional_path, coerce_positive_int, normalize_verbosity_label


def config_from_dict(payload: Mapping[str, Any]) -> QhomConfig:
    raw_verbosity = payload.get("verbosity")
    verbosity = normalize_verbosity_label(raw_verbosity if isinstance(raw_verbosity, str) else None)

    runs_payload = payload.get("runs")
    if not isinstance(runs_payload, Mapping):
        runs_payload = {}

    runs = RunDefaults(
        budget=coerce_positive_int(runs_payload.get("budget"), default=DEFAULT_BUDGET),
        jobs=coerce_positive_int(runs_payload.get("jobs"), default=DEFAULT_JOBS),
        memory_guard=coerce_positive_int(runs_payload.get("memory_guard"), default=DEFAULT_MEMORY_GUARD),
        degree_cap=coerce_positive_int(runs_payload.get("degree_cap"), default=DEFAULT_DEGREE_CAP),
        sample_seed=coerce_positive_int(runs_payload.get("sample_seed"), minimum=0, default=DEFAULT_SAMPLE_SEED),
        cache_dir=coerce_optional_path(runs_payload.get("cache_dir")),
    )
    return QhomConfig(verbosity=verbosity, runs=runs)


def config_to_dict(config: QhomConfig) -> dict[str, Any]:
    payload: dict[str, Any] = {}
    if config.verbosity:
        normalized = normalize_verbosity_label(config.verbosity)
        if normalized:
            payload["verbosity"] = normalized

    if not config.runs.is_default():
        runs_payload: dict[str, Any] = {
            "budget": config.runs.budget,
            "jobs": config.runs.jobs,
            "memory_guard": config.runs.memory_guard,
            "degree_cap": config.runs.degree_cap,
            "sample_seed": config.runs.sample_seed,
        }
        if config.runs.cache_dir:
            runs_payload["cache_dir"] = config.runs.cache_dir
        payload["runs"] = runs_payload
    return payload
