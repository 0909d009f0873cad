"""Implementation of the `config` command group."""

from __future__ import annotations

import typer

from qhom.core.configuration.serde import config_to_dict
from qhom.core.runs import OutputFormat

from ..bootstrap import bootstrap_runtime
from ..services.rendering import render_settings, to_csv, to_json
from .common import FORMAT_OPTION


def register(app: typer.Typer) -> None:
    """Register the `config` command group with the provided Typer app."""

    config_app = typer.Typer(help="Inspect qhom configuration.")
    app.add_typer(config_app, name="config")

    @config_app.command("show")
    def show(output: OutputFormat = FORMAT_OPTION) -> None:  # type: ignore[func-returns-value]
        """Print the effective configuration and where each value comes from."""

        context = bootstrap_runtime()
        config_path = context.config.config_path
        settings = context.config.describe()
        if output is OutputFormat.JSON:
            payload = {
                "config_file": str(config_path) if config_path else None,
                "file": config_to_dict(context.config.load()),
                "effective": {s.key: {"value": s.value, "source": s.source} for s in settings},
            }
            context.emit(to_json(payload))
            return
        if output is OutputFormat.CSV:
            context.emit(to_csv(("setting", "value", "source"), ([s.key, str(s.value), s.source] for s in settings)))
            return
        render_settings(context, settings, str(config_path) if config_path else "(none)")
