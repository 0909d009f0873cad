"""Typer application wiring for the qhom CLI."""

from __future__ import annotations

import typer

from .bootstrap import force_verbosity
from .commands.config import register as register_config
from .commands.homology import register as register_homology
from .commands.multiterm import register as register_multiterm
from .commands.theorem import register as register_theorem
from .commands.validate import register as register_validate
from .commands.verify import register as register_verify


def build_app() -> typer.Typer:
    """Construct the Typer application and register subcommands."""

    app = typer.Typer(
        name="qhom",
        help="Exact rack, quandle and multi-term homology of finite quandles.",
        invoke_without_command=True,
        add_completion=False,
    )

    register_validate(app)
    register_homology(app)
    register_verify(app)
    register_theorem(app)
    register_multiterm(app)
    register_config(app)

    @app.callback(invoke_without_command=True)
    def main(
        ctx: typer.Context,
        verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level for this run."),
        version: bool | None = typer.Option(
            None,
            "--version",
            help="Show the qhom version and exit.",
        ),
    ) -> None:
        force_verbosity("verbose" if verbose else None)

        if version:
            from qhom import __version__

            typer.echo(f"qhom {__version__}")
            raise typer.Exit()

        if ctx.invoked_subcommand is None:
            typer.echo(ctx.get_help())
            raise typer.Exit()

    return app


app = build_app()
