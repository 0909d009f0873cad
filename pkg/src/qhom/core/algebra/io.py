"""Reading and writing quandle table files."""

from __future__ import annotations

from pathlib import Path

from qhom.core.errors import TableError, TableParseError

from .operations import FiniteBinaryOp, from_table


def parse_table_text(text: str) -> FiniteBinaryOp:
    """
    Parse the plain-text table format.

    The first content line holds ``n``; the next ``n`` content lines hold the
    rows, entry ``b`` of row ``a`` being ``a*b``. Lines starting with ``#``
    and blank lines are skipped. Errors carry the 1-based line number.
    """
    content: list[tuple[int, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        content.append((number, stripped))

    if not content:
        raise TableParseError("file holds no table", line=1)

    header_line, header = content[0]
    try:
        n = int(header)
    except ValueError as exc:
        raise TableParseError(f"expected the table size, got {header!r}", line=header_line) from exc
    if n < 1:
        raise TableParseError(f"table size must be positive, got {n}", line=header_line)

    rows = content[1:]
    if len(rows) < n:
        last_line = rows[-1][0] if rows else header_line
        raise TableParseError(f"expected {n} rows, found {len(rows)}", line=last_line)
    if len(rows) > n:
        raise TableParseError(f"unexpected content after {n} rows", line=rows[n][0])

    entries: list[list[int]] = []
    for a, (number, line) in enumerate(rows):
        parts = line.split()
        if len(parts) != n:
            raise TableParseError(f"row {a} has {len(parts)} entries, expected {n}", line=number)
        try:
            entries.append([int(part) for part in parts])
        except ValueError as exc:
            raise TableParseError(f"row {a} holds a non-integer entry", line=number) from exc

    try:
        return from_table(n, entries)
    except TableError as exc:
        line = rows[exc.row][0] if exc.row is not None else header_line
        raise TableParseError(str(exc), line=line) from exc


def load_table(path: Path) -> FiniteBinaryOp:
    return parse_table_text(path.read_text(encoding="utf-8"))


def write_table(op: FiniteBinaryOp, path: Path, *, comment: str | None = None) -> None:
    header = f"# {comment}\n" if comment else ""
    path.write_text(header + op.to_text(), encoding="utf-8")
