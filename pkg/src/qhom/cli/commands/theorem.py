"""Implementation of the `theorem` subcommand."""

from __future__ import annotations

from pathlib import Path

import typer

from qhom.core.runs import OutputFormat, engine_for, explore_transposition_quandle, theorem_rows

from ..bootstrap import bootstrap_runtime
from ..context import FAILURE_EXIT_CODE, exit_on_error
from ..services.loader import load_quandle
from ..services.rendering import render_theorem
from .common import CACHE_DIR_OPTION, FORCE_OPTION, FORMAT_OPTION, JOBS_OPTION, NO_CACHE_OPTION, build_run_config
from .homology import THEORY_OPTION, resolve_theory

SOURCES_ARGUMENT = typer.Argument(..., help="Quandles to check (catalog names or table files).")

MAX_DEGREE_OPTION = typer.Option(3, "--max-degree", "-n", min=1, help="Check degrees 1..N.")

EXPLORE_OPTION = typer.Option(
    False,
    "--explore",
    help="Also compute H_3^Q of the six-transposition conjugation quandle and compare it with Z/24.",
)


def register(app: typer.Typer) -> None:
    """Register the `theorem` subcommand with the provided Typer app."""

    @app.command()
    def theorem(  # type: ignore[func-returns-value]
        sources: list[str] = SOURCES_ARGUMENT,
        max_degree: int = MAX_DEGREE_OPTION,
        theory: str = THEORY_OPTION,
        explore: bool = EXPLORE_OPTION,
        output: OutputFormat = FORMAT_OPTION,
        jobs: int | None = JOBS_OPTION,
        force: bool = FORCE_OPTION,
        no_cache: bool = NO_CACHE_OPTION,
        cache_dir: Path | None = CACHE_DIR_OPTION,
    ) -> None:
        """Check that |Q| annihilates the torsion of quasigroup quandles."""

        context = bootstrap_runtime()
        complex_theory = resolve_theory(theory)
        with exit_on_error(context):
            quandles = [load_quandle(source) for source in sources]
            config = build_run_config(
                context,
                source=",".join(q.label for q in quandles),
                theory=complex_theory,
                degrees=(1, max_degree),
                output=output,
                jobs=jobs,
                force=force,
                no_cache=no_cache,
                cache_dir=cache_dir,
            )
            engine = engine_for(config)
            rows = theorem_rows(quandles, config, engine=engine)
            finding = explore_transposition_quandle(engine) if explore else None
        render_theorem(context, rows, output, finding)

        violations = [row for row in rows if row.violation]
        if violations:
            if output is OutputFormat.TEXT:
                context.print(f"[red]{len(violations)} quasigroup row(s) violate the |Q| bound.[/]")
            raise typer.Exit(FAILURE_EXIT_CODE)
