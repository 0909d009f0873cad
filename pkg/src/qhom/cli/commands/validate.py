"""Implementation of the `validate` subcommand."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import typer

from qhom.core.algebra import FiniteQuandle, inner_group_order, orbits, validate, write_table
from qhom.core.runs import OutputFormat

from ..bootstrap import bootstrap_runtime
from ..context import exit_on_error
from ..services.loader import load_operation
from ..services.rendering import render_axiom_report
from .common import FORMAT_OPTION

SOURCE_ARGUMENT = typer.Argument(..., help="Catalog name (R3, Alex(5,2), ...) or path to a table file.")

INNER_OPTION = typer.Option(False, "--inner-group", help="Also compute the order of the inner automorphism group.")

EXPORT_OPTION = typer.Option(None, "--export", help="Write the operation table to this file.")


def register(app: typer.Typer) -> None:
    """Register the `validate` subcommand with the provided Typer app."""

    @app.command("validate")
    def validate_cmd(  # type: ignore[func-returns-value]
        source: str = SOURCE_ARGUMENT,
        inner_group: bool = INNER_OPTION,
        export: Path | None = EXPORT_OPTION,
        output: OutputFormat = FORMAT_OPTION,
    ) -> None:
        """Check the shelf, rack, quandle and quasigroup axioms of a table."""

        context = bootstrap_runtime()
        with exit_on_error(context):
            op, label = load_operation(source)
            report = validate(op)
            summary: dict[str, Any] = {"size": op.size, "table_sha256": op.sha256}
            if report.all_required_passed:
                quandle = FiniteQuandle.from_op(op, label)
                summary["orbits"] = len(orbits(quandle))
                summary["connected"] = quandle.is_connected
                if inner_group:
                    summary["inner_group_order"] = inner_group_order(quandle)
            render_axiom_report(context, label, report, summary, output)

            if export is not None:
                write_table(op, export, comment=label)
                if output is OutputFormat.TEXT:
                    context.print(f"[green]Table written to:[/] {export}")
