"""Validated finite quandles and their structural invariants."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from qhom.core.errors import AxiomError, BudgetError, TableError

from .operations import QUANDLE, QUASIGROUP, RACK, SHELF, AxiomReport, FiniteBinaryOp, from_table, validate

logger = logging.getLogger("qhom.algebra")

DEFAULT_INNER_GROUP_LIMIT = 1_000_000


@dataclass(frozen=True)
class FiniteQuandle:
    """
    A finite quandle over ``{0..n-1}``.

    Instances are built through :meth:`from_op`, which runs every axiom check
    and refuses tables that are not quandles.
    """

    op: FiniteBinaryOp
    label: str
    orbits: tuple[tuple[int, ...], ...]
    quasigroup: bool

    @classmethod
    def from_op(cls, op: FiniteBinaryOp, label: str) -> FiniteQuandle:
        report = validate(op)
        for name in (SHELF, RACK, QUANDLE):
            check = report.get(name)
            if not check.passed:
                raise AxiomError(f"{label}: {name} axiom fails ({check.detail})", check)
        return cls(
            op=op,
            label=label,
            orbits=_orbit_partition(op),
            quasigroup=report.passed(QUASIGROUP),
        )

    @property
    def size(self) -> int:
        return self.op.size

    def __call__(self, a: int, b: int) -> int:
        return self.op(a, b)

    def __len__(self) -> int:
        return self.op.size

    @property
    def is_connected(self) -> bool:
        return len(self.orbits) == 1

    def report(self) -> AxiomReport:
        return validate(self.op)

    @cached_property
    def _inverse_translations(self) -> tuple[tuple[int, ...], ...]:
        inverses = []
        for column in self.op.translations:
            inverse = [0] * self.size
            for a, value in enumerate(column):
                inverse[value] = a
            inverses.append(tuple(inverse))
        return tuple(inverses)

    def right_divide(self, a: int, b: int) -> int:
        """``a \\bar* b``: the unique ``x`` with ``x*b = a``."""
        return self._inverse_translations[b][a]

    @cached_property
    def _left_solutions(self) -> tuple[tuple[int, ...], ...] | None:
        if not self.quasigroup:
            return None
        solutions = []
        for row in self.op.table:
            inverse = [0] * self.size
            for x, value in enumerate(row):
                inverse[value] = x
            solutions.append(tuple(inverse))
        return tuple(solutions)

    def left_divide(self, a: int, b: int) -> int:
        """The unique ``x`` with ``a*x = b``; only defined for quasigroup quandles."""
        solutions = self._left_solutions
        if solutions is None:
            raise AxiomError(f"{self.label} is not a quasigroup quandle; left division is undefined")
        return solutions[a][b]


def _orbit_partition(op: FiniteBinaryOp) -> tuple[tuple[int, ...], ...]:
    # Translations are bijections, so closure under a -> a*b also covers a -> a \bar* b.
    seen: set[int] = set()
    blocks: list[tuple[int, ...]] = []
    for start in op.elements():
        if start in seen:
            continue
        block = {start}
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in op.elements():
                for nxt in (op(a, b), op.translations[b].index(a)):
                    if nxt not in block:
                        block.add(nxt)
                        queue.append(nxt)
        seen |= block
        blocks.append(tuple(sorted(block)))
    return tuple(blocks)


def orbits(q: FiniteQuandle) -> tuple[tuple[int, ...], ...]:
    """Orbits of the right action of ``q`` on itself, blocks sorted by least element."""
    return q.orbits


def _compose(first: tuple[int, ...], then: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(then[i] for i in first)


def inner_group_order(q: FiniteQuandle, *, limit: int = DEFAULT_INNER_GROUP_LIMIT) -> int:
    """
    Order of the group generated by the right translations of ``q``.

    Naive closure with a seen-set; fine while the group stays in the thousands.
    Raises BudgetError once more than ``limit`` elements have been found.
    """
    identity = tuple(range(q.size))
    generators = sorted(set(q.op.translations) - {identity})
    group = {identity}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for element in frontier:
            for generator in generators:
                candidate = _compose(element, generator)
                if candidate not in group:
                    group.add(candidate)
                    next_frontier.append(candidate)
                    if len(group) > limit:
                        raise BudgetError(f"inner group of {q.label} exceeds {limit} elements")
        frontier = next_frontier
    logger.debug("inner group of %s has order %d", q.label, len(group))
    return len(group)


def relabel(q: FiniteQuandle, perm: Sequence[int]) -> FiniteQuandle:
    """Transport ``q`` along the bijection ``a -> perm[a]``."""
    n = q.size
    if sorted(perm) != list(range(n)):
        raise TableError(f"relabelling of {q.label} is not a permutation of 0..{n - 1}")
    entries = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            entries[perm[a]][perm[b]] = perm[q(a, b)]
    return FiniteQuandle.from_op(from_table(n, entries), f"{q.label}~relabelled")
