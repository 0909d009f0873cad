"""Run configuration, result records, the on-disk cache and the experiment engine."""

from __future__ import annotations

from .cache import ResultCache, cache_key
from .engine import (
    NO,
    NOT_APPLICABLE,
    YES,
    ExploratoryFinding,
    HomologyEngine,
    Identity,
    MultiTermRow,
    TheoremRow,
    VerifyOptions,
    engine_for,
    explore_transposition_quandle,
    multi_term_rows,
    run_homology,
    source_sha256,
    theorem_rows,
    unexpected_outcome,
    verify_identity,
    verify_multi_term,
)
from .records import CSV_COLUMNS, ENGINE_VERSION, OutputFormat, ResultRecord, RunConfig

__all__ = [
    "CSV_COLUMNS",
    "ENGINE_VERSION",
    "NO",
    "NOT_APPLICABLE",
    "YES",
    "ExploratoryFinding",
    "HomologyEngine",
    "Identity",
    "MultiTermRow",
    "OutputFormat",
    "ResultCache",
    "ResultRecord",
    "RunConfig",
    "TheoremRow",
    "VerifyOptions",
    "cache_key",
    "engine_for",
    "explore_transposition_quandle",
    "multi_term_rows",
    "run_homology",
    "source_sha256",
    "theorem_rows",
    "unexpected_outcome",
    "verify_identity",
    "verify_multi_term",
]
