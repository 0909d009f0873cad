"""Distributive sets of operations (multi-quandles)."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product

from qhom.core.errors import TableError

from .operations import (
    QUANDLE,
    RACK,
    SHELF,
    AxiomCheck,
    AxiomReport,
    FiniteBinaryOp,
    check_quasigroup,
    distributivity_witness,
    trivial_op,
    validate,
)
from .quandle import FiniteQuandle


@dataclass(frozen=True)
class DistributiveSet:
    """Operations on one set, ``ops[0]`` reserved for the trivial operation."""

    ops: tuple[FiniteBinaryOp, ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.ops:
            raise TableError("distributive set needs at least the trivial operation")
        if len(self.labels) != len(self.ops):
            raise TableError("distributive set needs one label per operation")
        sizes = {op.size for op in self.ops}
        if len(sizes) != 1:
            raise TableError(f"operations act on sets of different sizes: {sorted(sizes)}")

    @classmethod
    def from_quandles(cls, quandles: Sequence[FiniteQuandle]) -> DistributiveSet:
        """Prepend the trivial operation to the given quandle operations."""
        if not quandles:
            raise TableError("distributive set needs at least one quandle operation")
        n = quandles[0].size
        if any(q.size != n for q in quandles):
            raise TableError("quandles in a distributive set must share their size")
        return cls(
            ops=(trivial_op(n), *(q.op for q in quandles)),
            labels=("*0", *(q.label for q in quandles)),
        )

    @property
    def size(self) -> int:
        return self.ops[0].size

    def __len__(self) -> int:
        return len(self.ops)


def distributive_check_name(i: int, j: int) -> str:
    return f"distributive({i},{j})"


def validate_distributive_set(s: DistributiveSet) -> AxiomReport:
    """
    Check every ordered pair ``(*_i, *_j)`` for
    ``(a *_i b) *_j c = (a *_j c) *_i (b *_j c)``, that ``ops[0]`` is trivial,
    that each ``ops[i]`` with ``i >= 1`` is a quandle, and flag quasigroup status.
    """
    checks: list[AxiomCheck] = []
    first = s.ops[0]
    checks.append(
        AxiomCheck(
            "trivial(0)",
            first.is_trivial,
            None if first.is_trivial else _first_nontrivial(first),
            "" if first.is_trivial else "ops[0] is not a*b = a",
        )
    )
    for i, j in product(range(len(s.ops)), repeat=2):
        witness = distributivity_witness(s.ops[i], s.ops[j])
        detail = ""
        if witness is not None:
            a, b, c = witness
            detail = f"(a *{i} b) *{j} c != (a *{j} c) *{i} (b *{j} c) at a={a}, b={b}, c={c}"
        checks.append(AxiomCheck(distributive_check_name(i, j), witness is None, witness, detail))
    for i, op in enumerate(s.ops[1:], start=1):
        report = validate(op)
        failure = next((report.get(name) for name in (SHELF, RACK, QUANDLE) if not report.passed(name)), None)
        checks.append(
            AxiomCheck(
                f"quandle({i})",
                failure is None,
                failure.witness if failure else None,
                f"{failure.name}: {failure.detail}" if failure else "",
            )
        )
        quasigroup = check_quasigroup(op)
        checks.append(
            AxiomCheck(f"quasigroup({i})", quasigroup.passed, quasigroup.witness, quasigroup.detail, required=False)
        )
    return AxiomReport(tuple(checks))


def _first_nontrivial(op: FiniteBinaryOp) -> tuple[int, int]:
    for a, b in product(op.elements(), repeat=2):
        if op(a, b) != a:
            return (a, b)
    raise AssertionError("operation is trivial")
