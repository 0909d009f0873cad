"""Implementation of the `verify` subcommand."""

from __future__ import annotations

import typer

from qhom.core.runs import Identity, OutputFormat, VerifyOptions, unexpected_outcome, verify_identity

from ..bootstrap import bootstrap_runtime
from ..context import FAILURE_EXIT_CODE, exit_on_error
from ..services.loader import load_quandle
from ..services.rendering import render_verification
from .common import BUDGET_OPTION, FORMAT_OPTION, SAMPLE_OPTION

SOURCE_ARGUMENT = typer.Argument(..., help="Catalog name (R3, Alex(5,2), ...) or path to a table file.")

IDENTITY_OPTION = typer.Option(Identity.G, "--identity", "-i", help="Identity family to check.")

DEGREE_OPTION = typer.Option(2, "--degree", "-n", min=0, help="Degree of the basis tuples the identity is applied to.")

INDEX_OPTION = typer.Option(None, "--index", help="Only this homotopy index j (D and F identities).", min=1)

EXPECT_FAILURE_OPTION = typer.Option(
    False,
    "--expect-failure",
    help="Negative control: succeed only when an asserted clause fails.",
)


def register(app: typer.Typer) -> None:
    """Register the `verify` subcommand with the provided Typer app."""

    @app.command()
    def verify(  # type: ignore[func-returns-value]
        source: str = SOURCE_ARGUMENT,
        identity: Identity = IDENTITY_OPTION,
        degree: int = DEGREE_OPTION,
        index: int | None = INDEX_OPTION,
        budget: int | None = BUDGET_OPTION,
        sample: bool = SAMPLE_OPTION,
        expect_failure: bool = EXPECT_FAILURE_OPTION,
        output: OutputFormat = FORMAT_OPTION,
    ) -> None:
        """Machine-check a chain homotopy identity on every basis tuple."""

        context = bootstrap_runtime()
        defaults = context.config.get_run_defaults()
        with exit_on_error(context):
            quandle = load_quandle(source)
            options = VerifyOptions(
                budget=budget if budget is not None else defaults.budget,
                sample=sample,
                seed=defaults.sample_seed,
                j=index,
                expect_failure=expect_failure,
            )
            report = verify_identity(quandle, identity, degree, options)
        render_verification(context, report, output)

        if unexpected_outcome(report, expect_failure=expect_failure):
            if output is OutputFormat.TEXT:
                verdict = "passed although a failure was expected" if expect_failure else "failed"
                context.print(f"[red]Verification {verdict}.[/]")
            raise typer.Exit(FAILURE_EXIT_CODE)
