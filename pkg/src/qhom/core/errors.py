"""Typed exceptions raised by the qhom engine.

Axiom reports and verification reports are findings, not errors; the
exceptions below signal unusable input or a broken computation.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from qhom.core.algebra.operations import AxiomCheck


class QhomError(Exception):
    """Base class for every error raised deliberately by qhom."""


class TableError(QhomError, ValueError):
    """Raised when an operation table has the wrong shape or out-of-range entries."""

    def __init__(self, message: str, *, row: int | None = None, col: int | None = None) -> None:
        super().__init__(message)
        self.row = row
        self.col = col


class TableParseError(TableError):
    """Raised when a quandle table file cannot be parsed."""

    def __init__(self, message: str, *, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class AxiomError(QhomError, ValueError):
    """Raised when a construction requires an axiom that does not hold."""

    def __init__(self, message: str, check: AxiomCheck | None = None) -> None:
        super().__init__(message)
        self.check = check


class ClosureError(QhomError, ValueError):
    """Raised when a conjugation class is not closed under conjugation."""

    def __init__(self, message: str, *, pair: tuple[int, int]) -> None:
        super().__init__(message)
        self.pair = pair


class DegreeError(QhomError, ValueError):
    """Raised for face indices, homotopy indices or degrees outside their range."""


class ComposabilityError(QhomError, ValueError):
    """Raised when two boundary matrices cannot be composed."""


class BrokenComplexError(QhomError, RuntimeError):
    """Raised when a composite of consecutive boundaries is nonzero."""

    def __init__(self, message: str, *, column: int) -> None:
        super().__init__(message)
        self.column = column


class HypothesisError(QhomError, ValueError):
    """Raised when the hypotheses of the multi-term annihilation theorem fail."""

    def __init__(self, hypothesis: str, detail: str = "") -> None:
        super().__init__(f"{hypothesis}: {detail}" if detail else hypothesis)
        self.hypothesis = hypothesis


class BudgetError(QhomError, RuntimeError):
    """Raised when a computation would exceed its evaluation or memory budget."""


class UnknownQuandleError(QhomError, LookupError):
    """Raised when a catalog name cannot be resolved."""

    def __init__(self, name: str, known: Sequence[str] = ()) -> None:
        hint = f" (known forms: {', '.join(known)})" if known else ""
        super().__init__(f"Unknown quandle '{name}'{hint}")
        self.name = name


class RankMismatchError(QhomError, RuntimeError):
    """Raised when a modular rank exceeds the exact rank, which no correct elimination allows."""

    def __init__(self, message: str, *, matrix: str, predicted: Sequence[int], exact: int) -> None:
        super().__init__(message)
        self.matrix = matrix
        self.predicted = tuple(predicted)
        self.exact = exact
