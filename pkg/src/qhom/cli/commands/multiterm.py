"""Implementation of the `multiterm` subcommand."""

from __future__ import annotations

from pathlib import Path

import typer

from qhom.core.chains import ComplexTheory
from qhom.core.homotopy import VerificationReport
from qhom.core.runs import OutputFormat, VerifyOptions, multi_term_rows, verify_multi_term

from ..bootstrap import bootstrap_runtime
from ..context import FAILURE_EXIT_CODE, exit_on_error
from ..services.loader import load_multi_term
from ..services.rendering import render_multi_term
from .common import (
    CACHE_DIR_OPTION,
    FORCE_OPTION,
    FORMAT_OPTION,
    JOBS_OPTION,
    NO_CACHE_OPTION,
    build_run_config,
    parse_coeffs,
    parse_degrees,
)
from .homology import DEGREES_OPTION

OPERATIONS_ARGUMENT = typer.Argument(
    ...,
    help="Quandle operations *1..*k; the trivial operation *0 is prepended.",
)

COEFFS_OPTION = typer.Option(..., "--coeffs", "-c", help="Coefficients a0,a1,...,ak (use --coeffs=-1,1 for a leading minus).")

VERIFY_OPTION = typer.Option(
    False,
    "--verify",
    help="Also check the multi-term homotopy identities in every degree of the range.",
)


def register(app: typer.Typer) -> None:
    """Register the `multiterm` subcommand with the provided Typer app."""

    @app.command()
    def multiterm(  # type: ignore[func-returns-value]
        operations: list[str] = OPERATIONS_ARGUMENT,
        coeffs: str = COEFFS_OPTION,
        degrees: str = DEGREES_OPTION,
        verify: bool = VERIFY_OPTION,
        output: OutputFormat = FORMAT_OPTION,
        jobs: int | None = JOBS_OPTION,
        force: bool = FORCE_OPTION,
        no_cache: bool = NO_CACHE_OPTION,
        cache_dir: Path | None = CACHE_DIR_OPTION,
    ) -> None:
        """Multi-term homology with the exponent compared against a0*|X|."""

        context = bootstrap_runtime()
        coefficients = parse_coeffs(coeffs)
        degree_range = parse_degrees(degrees)
        with exit_on_error(context):
            spec = load_multi_term(operations, coefficients)
            config = build_run_config(
                context,
                source=spec.label,
                theory=ComplexTheory.multi_term(spec),
                degrees=degree_range,
                output=output,
                jobs=jobs,
                force=force,
                no_cache=no_cache,
                cache_dir=cache_dir,
            )
            rows = multi_term_rows(spec, config)
            reports: list[VerificationReport] = []
            if verify:
                options = VerifyOptions(budget=config.budget, seed=config.sample_seed)
                reports = [verify_multi_term(spec, n, options) for n in config.degrees]
        render_multi_term(context, rows, output, reports)

        failed = any(row.violation for row in rows) or any(not report.passed for report in reports)
        if failed:
            if output is OutputFormat.TEXT:
                context.print("[red]The a0*|X| bound or a homotopy identity failed.[/]")
            raise typer.Exit(FAILURE_EXIT_CODE)
