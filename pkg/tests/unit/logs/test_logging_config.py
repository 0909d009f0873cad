import io
import logging
import unittest

from rich.console import Console

from qhom.core.logging import PROJECT_LOGGER_NAME, build_handler
from qhom.core.logging.config import MAX_MESSAGE_CHARS


class LongMessageFilterTests(unittest.TestCase):
    def setUp(self) -> None:
        self.stream = io.StringIO()
        self.handler = build_handler(Console(file=self.stream, width=10_000))
        self.project_logger = logging.getLogger(PROJECT_LOGGER_NAME)
        self.previous_level = self.project_logger.level
        self.project_logger.addHandler(self.handler)
        self.project_logger.setLevel(logging.INFO)

    def tearDown(self) -> None:
        self.project_logger.removeHandler(self.handler)
        self.project_logger.setLevel(self.previous_level)

    def test_records_from_child_loggers_are_truncated(self) -> None:
        logging.getLogger("qhom.homology").info("x" * 5000)

        output = self.stream.getvalue()
        self.assertIn(f"{5000 - MAX_MESSAGE_CHARS} more chars", output)
        self.assertNotIn("x" * (MAX_MESSAGE_CHARS + 1), output)

    def test_short_records_pass_unchanged(self) -> None:
        logging.getLogger("qhom.runs").info("cache hit for R3 degree %d", 2)

        output = self.stream.getvalue()
        self.assertIn("cache hit for R3 degree 2", output)
        self.assertNotIn("more chars", output)


if __name__ == "__main__":
    unittest.main()
