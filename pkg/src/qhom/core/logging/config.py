"""Rich logging configuration helpers for qhom."""

from __future__ import annotations

import logging
from collections.abc import Iterable

from rich.console import Console
from rich.logging import RichHandler

PROJECT_LOGGER_NAME = "qhom"
MAX_MESSAGE_CHARS = 2_000


class LongMessageFilter(logging.Filter):
    """Truncate oversized records such as fully expanded witness chains."""

    def __init__(self, limit: int = MAX_MESSAGE_CHARS) -> None:
        super().__init__()
        self.limit = limit

    def filter(self, record: logging.LogRecord) -> bool:
        message = record.getMessage()
        if len(message) <= self.limit:
            return True
        record.msg = f"{message[: self.limit]}… ({len(message) - self.limit} more chars)"
        record.args = None
        return True


def build_handler(console: Console | None = None) -> RichHandler:
    """Rich handler on stderr that truncates oversized records from any ``qhom.*`` logger."""
    handler = RichHandler(
        console=console or Console(stderr=True),
        rich_tracebacks=True,
        show_time=False,
        markup=True,
    )
    handler.addFilter(LongMessageFilter())
    return handler


def configure_logging(
    *,
    level: int = logging.WARNING,
    quiet_loggers: Iterable[str] | None = None,
) -> logging.Logger:
    """
    Configure the Rich logging handler and return the project logger.

    Records go to stderr so JSON and CSV on stdout stay parseable.
    Subsequent calls only adjust the project logger level because
    logging.basicConfig applies once.
    """
    logging.basicConfig(level=level, format="%(message)s", handlers=[build_handler()])

    project_logger = logging.getLogger(PROJECT_LOGGER_NAME)
    project_logger.setLevel(level)

    for name in quiet_loggers or ("sympy", "hypothesis"):
        logging.getLogger(name).setLevel(logging.WARNING)

    return project_logger
