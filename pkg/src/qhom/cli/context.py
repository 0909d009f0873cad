"""Context primitives shared across CLI modules."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass

import typer
from rich.console import Console
from rich.markup import escape

from qhom.core.configuration import ConfigManager
from qhom.core.errors import QhomError

USAGE_EXIT_CODE = 2
FAILURE_EXIT_CODE = 1


@dataclass
class CliContext:
    """Lightweight container for objects shared by CLI handlers."""

    console: Console
    config: ConfigManager

    def print(self, *args, **kwargs) -> None:
        """Convenience wrapper around the Rich console print method."""

        self.console.print(*args, **kwargs)

    def emit(self, text: str) -> None:
        """Write machine-readable output without markup, highlighting or wrapping."""

        self.console.out(text, highlight=False)


@contextmanager
def exit_on_error(context: CliContext) -> Iterator[None]:
    """Turn qhom errors into a one-line red message and exit code 2."""

    try:
        yield
    except QhomError as error:
        context.print(f"[red]{escape(str(error))}[/]")
        raise typer.Exit(USAGE_EXIT_CODE) from error
