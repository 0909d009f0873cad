"""Implementation of the `homology` subcommand."""

from __future__ import annotations

from pathlib import Path

import typer

from qhom.core.chains import ComplexTheory, TheoryKind
from qhom.core.runs import OutputFormat, run_homology

from ..bootstrap import bootstrap_runtime
from ..context import exit_on_error
from ..services.loader import load_quandle
from ..services.rendering import render_records
from .common import (
    CACHE_DIR_OPTION,
    FORCE_OPTION,
    FORMAT_OPTION,
    JOBS_OPTION,
    NO_CACHE_OPTION,
    build_run_config,
    parse_degrees,
)

SINGLE_QUANDLE_THEORIES = ("rack", "degenerate", "quandle", "reduced-quandle")

SOURCE_ARGUMENT = typer.Argument(..., help="Catalog name (R3, Alex(5,2), ...) or path to a table file.")

THEORY_OPTION = typer.Option(
    "rack",
    "--theory",
    "-t",
    help="Chain complex: rack, degenerate, quandle or reduced-quandle.",
)

DEGREES_OPTION = typer.Option("1..3", "--degrees", "-d", help="Degree range A..B (or a single degree).")

REDUCED_OPTION = typer.Option(False, "--reduced", help="Use the augmented complex with the quandle theory.")


def resolve_theory(name: str, *, reduced: bool = False) -> ComplexTheory:
    if name not in SINGLE_QUANDLE_THEORIES:
        raise typer.BadParameter(f"unknown theory {name!r}; choose from {', '.join(SINGLE_QUANDLE_THEORIES)}")
    theory = ComplexTheory.parse(name)
    if reduced:
        if theory.kind not in (TheoryKind.QUANDLE, TheoryKind.REDUCED_QUANDLE):
            raise typer.BadParameter("--reduced only applies to the quandle theory")
        return ComplexTheory.reduced_quandle()
    return theory


def register(app: typer.Typer) -> None:
    """Register the `homology` subcommand with the provided Typer app."""

    @app.command()
    def homology(  # type: ignore[func-returns-value]
        source: str = SOURCE_ARGUMENT,
        theory: str = THEORY_OPTION,
        degrees: str = DEGREES_OPTION,
        reduced: bool = REDUCED_OPTION,
        output: OutputFormat = FORMAT_OPTION,
        jobs: int | None = JOBS_OPTION,
        force: bool = FORCE_OPTION,
        no_cache: bool = NO_CACHE_OPTION,
        cache_dir: Path | None = CACHE_DIR_OPTION,
    ) -> None:
        """Compute integral homology groups degree by degree."""

        context = bootstrap_runtime()
        complex_theory = resolve_theory(theory, reduced=reduced)
        degree_range = parse_degrees(degrees)
        with exit_on_error(context):
            config = build_run_config(
                context,
                source=source,
                theory=complex_theory,
                degrees=degree_range,
                output=output,
                jobs=jobs,
                force=force,
                no_cache=no_cache,
                cache_dir=cache_dir,
            )
            quandle = load_quandle(source)
            records = run_homology(quandle, config)
        render_records(context, records, output)
