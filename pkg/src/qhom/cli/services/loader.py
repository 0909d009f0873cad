"""Resolve quandle sources given on the command line."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

from qhom.core.algebra import DistributiveSet, FiniteBinaryOp, FiniteQuandle, by_name, load_table
from qhom.core.chains import MultiTermSpec
from qhom.core.errors import TableParseError


def load_operation(source: str) -> tuple[FiniteBinaryOp, str]:
    """
    Read ``source`` as a table file when one exists at that path, otherwise
    as a catalog name. Returns the operation and its display label.
    """
    path = Path(source).expanduser()
    if path.is_file():
        try:
            return load_table(path), path.stem
        except UnicodeDecodeError as error:
            raise TableParseError(f"{path} is not a text table", line=1) from error
    quandle = by_name(source)
    return quandle.op, quandle.label


def load_quandle(source: str) -> FiniteQuandle:
    op, label = load_operation(source)
    return FiniteQuandle.from_op(op, label)


def load_multi_term(sources: Sequence[str], coeffs: Sequence[int]) -> MultiTermSpec:
    """The distributive set ``(*0, q_1, ..., q_k)`` with validated coefficients."""
    quandles = [load_quandle(source) for source in sources]
    return MultiTermSpec.validated(DistributiveSet.from_quandles(quandles), coeffs)
