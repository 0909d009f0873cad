"""Options and parameter parsers shared by several subcommands."""

from __future__ import annotations

import re
from dataclasses import replace
from pathlib import Path

import typer

from qhom.core.chains import ComplexTheory
from qhom.core.runs import OutputFormat, RunConfig

from ..context import CliContext

_DEGREE_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_degrees(value: str) -> tuple[int, int]:
    """``"A..B"`` or a single ``"N"``."""

    match = _DEGREE_RANGE.match(value)
    if match is None:
        raise typer.BadParameter(f"expected A..B or N, got {value!r}")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) is not None else low
    if low < 1:
        raise typer.BadParameter("degrees start at 1")
    if high < low:
        raise typer.BadParameter(f"empty degree range {low}..{high}")
    return low, high


def parse_coeffs(value: str) -> tuple[int, ...]:
    try:
        coeffs = tuple(int(part) for part in value.replace(" ", "").split(",") if part)
    except ValueError as error:
        raise typer.BadParameter(f"expected comma-separated integers, got {value!r}") from error
    if not coeffs:
        raise typer.BadParameter("at least one coefficient is required")
    return coeffs


def _validate_positive(ctx: typer.Context, param: typer.CallbackParam, value: int | None) -> int | None:
    if value is None:
        return None
    if value < 1:
        raise typer.BadParameter("must be greater than zero", ctx=ctx, param=param)
    return value


FORMAT_OPTION = typer.Option(
    OutputFormat.TEXT,
    "--format",
    "-f",
    help="Output format.",
    case_sensitive=False,
)

BUDGET_OPTION = typer.Option(
    None,
    "--budget",
    help="Maximum basis tuples evaluated per identity (default from config).",
    callback=_validate_positive,
)

JOBS_OPTION = typer.Option(
    None,
    "--jobs",
    "-j",
    help="Degrees computed concurrently (default from config).",
    callback=_validate_positive,
)

FORCE_OPTION = typer.Option(False, "--force", help="Run past the default degree cap.")

NO_CACHE_OPTION = typer.Option(False, "--no-cache", help="Neither read nor write cached results.")

CACHE_DIR_OPTION = typer.Option(
    None,
    "--cache-dir",
    help="Cache directory for this run (overrides QHOM_CACHE and the config file).",
)

SAMPLE_OPTION = typer.Option(
    False,
    "--sample",
    help="Check a seeded sample of basis tuples when the budget is too small for all of them.",
)


def build_run_config(
    context: CliContext,
    *,
    source: str,
    theory: ComplexTheory,
    degrees: tuple[int, int],
    output: OutputFormat,
    budget: int | None = None,
    jobs: int | None = None,
    force: bool = False,
    no_cache: bool = False,
    cache_dir: Path | None = None,
) -> RunConfig:
    """Merge command-line flags over the configured run defaults."""

    defaults = context.config.get_run_defaults()
    config = RunConfig(
        source=source,
        theory=theory,
        n_min=degrees[0],
        n_max=degrees[1],
        output=output,
        budget=defaults.budget,
        cache_dir=None if no_cache else context.config.resolve_cache_dir(cache_dir),
        jobs=defaults.jobs,
        memory_guard=defaults.memory_guard,
        degree_cap=defaults.degree_cap,
        sample_seed=defaults.sample_seed,
        force=force,
    )
    if budget is not None:
        config = replace(config, budget=budget)
    if jobs is not None:
        config = replace(config, jobs=jobs)
    return config
