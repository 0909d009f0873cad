"""Text, JSON and CSV rendering of qhom results."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable, Sequence
from typing import Any

from rich.markup import escape
from rich.table import Table

from qhom.core.algebra import AxiomReport
from qhom.core.configuration import SettingSource
from qhom.core.homotopy import VerificationReport
from qhom.core.runs import CSV_COLUMNS, ExploratoryFinding, MultiTermRow, OutputFormat, ResultRecord, TheoremRow

from ..context import CliContext

_STATUS_STYLE = {"pass": "[green]pass[/]", "fail": "[red]fail[/]"}
_FLAG_STYLE = {"yes": "[green]yes[/]", "no": "[red]no[/]"}


def to_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def to_csv(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _flag(value: str) -> str:
    return _FLAG_STYLE.get(value, f"[dim]{value}[/]")


def _torsion(torsion: Sequence[int]) -> str:
    return " ".join(str(t) for t in torsion) or "-"


# ----------------------------------------------------------------------
# Axiom reports
# ----------------------------------------------------------------------
def render_axiom_report(
    context: CliContext,
    label: str,
    report: AxiomReport,
    summary: dict[str, Any],
    output: OutputFormat,
) -> None:
    if output is OutputFormat.JSON:
        context.emit(to_json({"label": label, **report.to_dict(), **summary}))
        return
    if output is OutputFormat.CSV:
        rows = [[check.name, "yes" if check.passed else "no", " ".join(map(str, check.witness or ()))] for check in report]
        rows.extend([key, str(value), ""] for key, value in summary.items())
        context.emit(to_csv(("property", "holds", "witness"), rows))
        return

    table = Table(title=f"Axioms of {escape(label)}")
    table.add_column("Property", style="bold")
    table.add_column("Holds")
    table.add_column("Witness / detail")
    for check in report:
        mark = "[green]✓[/]" if check.passed else "[red]✗[/]"
        table.add_row(check.name, mark, escape(check.detail) if not check.passed else "")
    context.print(table)
    for key, value in summary.items():
        context.print(f"[dim]{key}:[/] {escape(str(value))}")


# ----------------------------------------------------------------------
# Homology records
# ----------------------------------------------------------------------
def render_records(context: CliContext, records: Sequence[ResultRecord], output: OutputFormat) -> None:
    if output is OutputFormat.JSON:
        context.emit(to_json([record.to_dict() for record in records]))
        return
    if output is OutputFormat.CSV:
        context.emit(to_csv(CSV_COLUMNS, (record.csv_row() for record in records)))
        return

    table = Table(title="Homology")
    for column in ("Quandle", "Theory", "n", "Group", "Free rank", "Torsion", "Exponent", "ms"):
        table.add_column(column)
    for record in records:
        table.add_row(
            escape(record.label),
            record.theory,
            str(record.degree),
            str(record.group),
            str(record.free_rank),
            _torsion(record.torsion),
            str(record.exponent),
            str(record.ms),
        )
    context.print(table)


# ----------------------------------------------------------------------
# Verification reports
# ----------------------------------------------------------------------
def render_verification(context: CliContext, report: VerificationReport, output: OutputFormat) -> None:
    if output is OutputFormat.JSON:
        context.emit(to_json(report.to_dict()))
        return
    if output is OutputFormat.CSV:
        rows = [
            [clause.name, clause.status, "yes" if clause.asserted else "no", str(clause.checked), clause.note]
            for clause in report.clauses
        ]
        context.emit(to_csv(("clause", "status", "asserted", "checked", "note"), rows))
        return

    scope = f"{report.evaluated} of {report.basis_size} tuples" + (" (sampled)" if report.sampled else "")
    table = Table(title=f"{escape(report.identity)} on {escape(report.subject)}, degree {report.degree}: {scope}")
    for column in ("Clause", "Status", "Checked", "Note"):
        table.add_column(column)
    for clause in report.clauses:
        status = _STATUS_STYLE[clause.status] if clause.asserted else f"[dim]{clause.status} (finding)[/]"
        table.add_row(escape(clause.name), status, str(clause.checked), escape(clause.note))
    context.print(table)

    witness = report.first_witness()
    if witness is not None:
        context.print(f"[yellow]First witness[/] ({escape(witness.case)}) at tuple {witness.basis_tuple}:")
        context.print(f"  lhs = {escape(str(witness.lhs))}")
        context.print(f"  rhs = {escape(str(witness.rhs))}")


# ----------------------------------------------------------------------
# Theorem and multi-term tables
# ----------------------------------------------------------------------
THEOREM_COLUMNS = (
    *CSV_COLUMNS,
    "quasigroup",
    "divides_q",
    "divides_q_pow_n",
    "divides_factorial",
    "inner_group_order",
    "divides_inner",
    "notes",
)


def render_theorem(
    context: CliContext,
    rows: Sequence[TheoremRow],
    output: OutputFormat,
    finding: ExploratoryFinding | None = None,
) -> None:
    if output is OutputFormat.JSON:
        payload: dict[str, Any] = {"rows": [row.to_dict() for row in rows]}
        if finding is not None:
            payload["exploratory"] = finding.to_dict()
        context.emit(to_json(payload))
        return
    if output is OutputFormat.CSV:
        context.emit(
            to_csv(
                THEOREM_COLUMNS,
                (
                    [
                        *row.record.csv_row(),
                        "yes" if row.quasigroup else "no",
                        row.divides_q,
                        row.divides_q_pow_n,
                        row.divides_factorial,
                        "" if row.inner_order is None else str(row.inner_order),
                        row.divides_inner,
                        "; ".join(row.notes),
                    ]
                    for row in rows
                ),
            )
        )
        return

    table = Table(title="Torsion annihilated by |Q|")
    for column in ("Quandle", "n", "Free rank", "Torsion", "Exponent", "| |Q|", "| |Q|^n", "| |Q|!", "| inner", "Notes"):
        table.add_column(column)
    for row in rows:
        record = row.record
        inner = _flag(row.divides_inner)
        if row.inner_order is not None:
            inner = f"{inner} ({row.inner_order})"
        table.add_row(
            escape(record.label),
            str(record.degree),
            str(record.free_rank),
            _torsion(record.torsion),
            str(record.exponent),
            _flag(row.divides_q),
            _flag(row.divides_q_pow_n),
            _flag(row.divides_factorial),
            inner,
            escape("; ".join(row.notes)),
        )
    context.print(table)

    if finding is not None:
        record = finding.record
        verdict = "[green]matches[/]" if finding.matches_candidate else "[yellow]differs from[/]"
        context.print(
            f"H_{record.degree}^Q({escape(record.label)}) = {record.group} {verdict} the Z/24 candidate; "
            f"inner group order {finding.inner_order} "
            + ("annihilates" if finding.annihilated_by_inner else "[red]does not annihilate[/]")
            + " the torsion."
        )


MULTI_TERM_COLUMNS = (*CSV_COLUMNS, "bound", "divides_bound")


def render_multi_term(
    context: CliContext,
    rows: Sequence[MultiTermRow],
    output: OutputFormat,
    reports: Sequence[VerificationReport] = (),
) -> None:
    if output is OutputFormat.JSON:
        payload = {"rows": [row.to_dict() for row in rows], "verification": [report.to_dict() for report in reports]}
        context.emit(to_json(payload))
        return
    if output is OutputFormat.CSV:
        context.emit(
            to_csv(MULTI_TERM_COLUMNS, ([*row.record.csv_row(), str(row.bound), row.divides_bound] for row in rows))
        )
        return

    title = escape(rows[0].record.label) if rows else "multi-term"
    table = Table(title=f"Multi-term homology {title}")
    for column in ("n", "Group", "Exponent", "a0|X|", "Divides"):
        table.add_column(column)
    for row in rows:
        record = row.record
        table.add_row(str(record.degree), str(record.group), str(record.exponent), str(row.bound), _flag(row.divides_bound))
    context.print(table)
    for report in reports:
        render_verification(context, report, output)


# ----------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------
def render_settings(context: CliContext, settings: Sequence[SettingSource], config_path: str) -> None:
    table = Table(title="Effective configuration")
    table.add_column("Setting", style="bold")
    table.add_column("Value")
    table.add_column("Source")
    for setting in settings:
        table.add_row(setting.key, escape(str(setting.value)), setting.source)
    context.print(table)
    context.print(f"[dim]Config file:[/] {escape(config_path)}")
