"""Finite binary operation tables and their axiom checks."""

from __future__ import annotations

import hashlib
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any

from qhom.core.errors import TableError

SHELF = "shelf"
RACK = "rack"
QUANDLE = "quandle"
QUASIGROUP = "quasigroup"


@dataclass(frozen=True)
class FiniteBinaryOp:
    """An ``n x n`` table over ``{0..n-1}``; ``table[a][b]`` is ``a*b``."""

    size: int
    table: tuple[tuple[int, ...], ...]

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def translations(self) -> tuple[tuple[int, ...], ...]:
        """Right translations: ``translations[b][a] == a*b``."""
        return tuple(tuple(self.table[a][b] for a in range(self.size)) for b in range(self.size))

    @cached_property
    def is_trivial(self) -> bool:
        return all(self.table[a][b] == a for a, b in product(self.elements(), repeat=2))

    def to_text(self) -> str:
        """Render in the quandle table file format (no comments)."""
        lines = [str(self.size)]
        lines.extend(" ".join(str(v) for v in row) for row in self.table)
        return "\n".join(lines) + "\n"

    @cached_property
    def sha256(self) -> str:
        return hashlib.sha256(self.to_text().encode("utf-8")).hexdigest()


def from_table(n: int, entries: Sequence[Sequence[int]]) -> FiniteBinaryOp:
    """Wrap a raw table, rejecting wrong shapes and out-of-range entries."""
    if n < 1:
        raise TableError(f"table size must be positive, got {n}")
    if len(entries) != n:
        raise TableError(f"dimension mismatch: expected {n} rows, got {len(entries)}")
    rows: list[tuple[int, ...]] = []
    for a, row in enumerate(entries):
        if len(row) != n:
            raise TableError(f"dimension mismatch: row {a} has {len(row)} entries, expected {n}", row=a)
        for b, value in enumerate(row):
            if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < n:
                raise TableError(f"entry out of range at ({a}, {b}): {value!r}", row=a, col=b)
        rows.append(tuple(row))
    return FiniteBinaryOp(size=n, table=tuple(rows))


def trivial_op(n: int) -> FiniteBinaryOp:
    """The operation ``a*b = a``."""
    return from_table(n, [[a] * n for a in range(n)])


def from_function(n: int, fn: Callable[[int, int], int]) -> FiniteBinaryOp:
    return from_table(n, [[fn(a, b) for b in range(n)] for a in range(n)])


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one axiom; ``witness`` is the lexicographically first failure."""

    name: str
    passed: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""
    required: bool = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "witness": list(self.witness) if self.witness is not None else None,
            "detail": self.detail,
            "required": self.required,
        }


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[AxiomCheck, ...] = field(default_factory=tuple)

    def __iter__(self) -> Iterator[AxiomCheck]:
        return iter(self.checks)

    def get(self, name: str) -> AxiomCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def passed(self, name: str) -> bool:
        return self.get(name).passed

    @property
    def all_required_passed(self) -> bool:
        return all(check.passed for check in self.checks if check.required)

    def first_failure(self) -> AxiomCheck | None:
        return next((c for c in self.checks if c.required and not c.passed), None)

    def to_dict(self) -> dict[str, Any]:
        return {"checks": [check.to_dict() for check in self.checks]}


def distributivity_witness(
    inner: FiniteBinaryOp,
    outer: FiniteBinaryOp,
) -> tuple[int, int, int] | None:
    """First ``(a, b, c)`` with ``(a inner b) outer c != (a outer c) inner (b outer c)``."""
    for a, b, c in product(inner.elements(), repeat=3):
        if outer(inner(a, b), c) != inner(outer(a, c), outer(b, c)):
            return (a, b, c)
    return None


def check_shelf(op: FiniteBinaryOp) -> AxiomCheck:
    witness = distributivity_witness(op, op)
    detail = ""
    if witness is not None:
        a, b, c = witness
        detail = f"({a}*{b})*{c} = {op(op(a, b), c)} but ({a}*{c})*({b}*{c}) = {op(op(a, c), op(b, c))}"
    return AxiomCheck(SHELF, witness is None, witness, detail)


def check_rack(op: FiniteBinaryOp) -> AxiomCheck:
    for b, column in enumerate(op.translations):
        seen: dict[int, int] = {}
        for a, value in enumerate(column):
            if value in seen:
                detail = f"{seen[value]}*{b} = {a}*{b} = {value}, so *_{b} is not injective"
                return AxiomCheck(RACK, False, (seen[value], a, b), detail)
            seen[value] = a
    return AxiomCheck(RACK, True)


def check_quandle(op: FiniteBinaryOp) -> AxiomCheck:
    for a in op.elements():
        if op(a, a) != a:
            return AxiomCheck(QUANDLE, False, (a,), f"{a}*{a} = {op(a, a)}")
    return AxiomCheck(QUANDLE, True)


def check_quasigroup(op: FiniteBinaryOp, *, required: bool = False) -> AxiomCheck:
    # On a finite set, a*x = b uniquely solvable for all b iff row a hits every value.
    for a, row in enumerate(op.table):
        hit = set(row)
        for b in op.elements():
            if b not in hit:
                return AxiomCheck(QUASIGROUP, False, (a, b), f"no x with {a}*x = {b}", required=required)
    return AxiomCheck(QUASIGROUP, True, required=required)


def validate(op: FiniteBinaryOp) -> AxiomReport:
    """Exhaustive shelf, rack, quandle and quasigroup checks."""
    return AxiomReport(
        (
            check_shelf(op),
            check_rack(op),
            check_quandle(op),
            check_quasigroup(op),
        )
    )
