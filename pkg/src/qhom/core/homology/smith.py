"""Smith normal form over the integers for sparse boundary matrices."""

from __future__ import annotations

import heapq
import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Literal

from qhom.core.chains import SparseIntMatrix

logger = logging.getLogger("qhom.homology")

PivotStrategy = Literal["markowitz", "dense"]

DENSE_SWITCH_DENSITY = 0.30
# Above this many cells the active block stays sparse even when dense enough.
DENSE_SWITCH_MAX_CELLS = 4_000_000
_DENSITY_CHECK_INTERVAL = 64

Dense = list[list[int]]


@dataclass(frozen=True)
class SmithDecomposition:
    """
    Nonzero invariant factors ``d_1 | d_2 | ... | d_r`` of a matrix.

    ``U`` and ``V`` are only present when transforms were requested; then
    ``U @ A @ V`` is diagonal with ``d`` on the diagonal.
    """

    d: tuple[int, ...]
    rank: int
    U: tuple[tuple[int, ...], ...] | None = None
    V: tuple[tuple[int, ...], ...] | None = None

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(x for x in self.d if x > 1)


def canonical_invariant_factors(values: Iterable[int]) -> tuple[int, ...]:
    """Turn any diagonal form into the divisibility chain via pairwise gcd/lcm."""
    ds = [abs(v) for v in values if v]
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            a, b = ds[i], ds[j]
            g = math.gcd(a, b)
            ds[i], ds[j] = g, a // g * b
    return tuple(ds)


def smith_normal_form(
    m: SparseIntMatrix,
    keep_transforms: bool = False,
    *,
    strategy: PivotStrategy = "markowitz",
) -> SmithDecomposition:
    """
    Invariant factors of ``m``.

    ``markowitz`` eliminates sparsely, preferring unit pivots in short rows
    and short columns, and hands the active block to the dense routine once
    its density passes ``DENSE_SWITCH_DENSITY``. ``dense`` runs the dense
    routine from the start with smallest-absolute-value pivots. Requesting
    transforms always uses the dense routine.
    """
    if keep_transforms:
        diagonal, U, V = _dense_smith(m.to_dense(), m.rows, m.cols, keep_transforms=True)
        d = canonical_invariant_factors(diagonal)
        return SmithDecomposition(d=d, rank=len(d), U=_freeze(U), V=_freeze(V))
    if strategy == "dense":
        diagonal, _, _ = _dense_smith(m.to_dense(), m.rows, m.cols, keep_transforms=False)
    else:
        diagonal = _sparse_smith(m)
    d = canonical_invariant_factors(diagonal)
    logger.debug("SNF of %dx%d (%s): rank %d, torsion %s", m.rows, m.cols, strategy, len(d), [x for x in d if x > 1])
    return SmithDecomposition(d=d, rank=len(d))


def _freeze(matrix: Dense | None) -> tuple[tuple[int, ...], ...] | None:
    if matrix is None:
        return None
    return tuple(tuple(row) for row in matrix)


def _sparse_smith(m: SparseIntMatrix) -> list[int]:
    rows: dict[int, dict[int, int]] = {r: dict(entries) for r, entries in m.row_map().items()}
    cols: dict[int, set[int]] = {}
    for r, entries in rows.items():
        for c in entries:
            cols.setdefault(c, set()).add(r)

    diagonal: list[int] = []
    nnz = sum(len(entries) for entries in rows.values())
    heap = [(len(entries), r) for r, entries in rows.items()]
    heapq.heapify(heap)
    pivots = 0

    while heap:
        length, r = heapq.heappop(heap)
        entries = rows.get(r)
        if entries is None:
            continue
        if len(entries) != length:
            # Stale; every modification pushes the current length.
            continue

        unit_cols = [c for c, v in entries.items() if v in (1, -1)]
        if not unit_cols:
            # Parked until an elimination touches the row again.
            continue
        c = min(unit_cols, key=lambda col: (len(cols[col]), col))
        u = entries[c]

        for s in sorted(cols[c] - {r}):
            target = rows[s]
            factor = target[c] * u
            for col, v in entries.items():
                new = target.get(col, 0) - factor * v
                if new:
                    if col not in target:
                        cols[col].add(s)
                        nnz += 1
                    target[col] = new
                elif col in target:
                    del target[col]
                    cols[col].discard(s)
                    nnz -= 1
            if target:
                heapq.heappush(heap, (len(target), s))
            else:
                del rows[s]

        for col in entries:
            cols[col].discard(r)
            if not cols[col]:
                del cols[col]
        nnz -= len(entries)
        del rows[r]
        diagonal.append(1)
        pivots += 1

        if pivots % _DENSITY_CHECK_INTERVAL == 0 and rows:
            cells = len(rows) * len(cols)
            if cells <= DENSE_SWITCH_MAX_CELLS and nnz > DENSE_SWITCH_DENSITY * cells:
                logger.debug("dense switch after %d unit pivots: %d rows x %d cols, %d nonzeros",
                             pivots, len(rows), len(cols), nnz)
                break

    if rows:
        row_order = sorted(rows)
        col_order = sorted(cols)
        col_pos = {c: j for j, c in enumerate(col_order)}
        block = [[0] * len(col_order) for _ in row_order]
        for i, r in enumerate(row_order):
            for c, v in rows[r].items():
                block[i][col_pos[c]] = v
        logger.debug("dense finish on %dx%d block after %d unit pivots", len(row_order), len(col_order), pivots)
        rest, _, _ = _dense_smith(block, len(row_order), len(col_order), keep_transforms=False)
        diagonal.extend(rest)
    return diagonal


def _identity(n: int) -> Dense:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _dense_smith(
    A: Dense,
    n_rows: int,
    n_cols: int,
    *,
    keep_transforms: bool,
) -> tuple[list[int], Dense | None, Dense | None]:
    """
    Dense elimination with smallest-absolute-value pivots.

    Works in place on ``A``. With transforms, every row operation is mirrored
    on ``U`` and every column operation on ``V`` so that ``U A_0 V = diag``.
    """
    U = _identity(n_rows) if keep_transforms else None
    V = _identity(n_cols) if keep_transforms else None

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            A[i], A[j] = A[j], A[i]
            if U is not None:
                U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            if V is not None:
                for row in V:
                    row[i], row[j] = row[j], row[i]

    def add_row(target: int, source: int, factor: int) -> None:
        # row_target += factor * row_source
        src, dst = A[source], A[target]
        for k in range(n_cols):
            if src[k]:
                dst[k] += factor * src[k]
        if U is not None:
            usrc, udst = U[source], U[target]
            for k in range(n_rows):
                if usrc[k]:
                    udst[k] += factor * usrc[k]

    def add_col(target: int, source: int, factor: int) -> None:
        # col_target += factor * col_source
        for row in A:
            if row[source]:
                row[target] += factor * row[source]
        if V is not None:
            for row in V:
                if row[source]:
                    row[target] += factor * row[source]

    def negate_row(i: int) -> None:
        A[i] = [-v for v in A[i]]
        if U is not None:
            U[i] = [-v for v in U[i]]

    diagonal: list[int] = []
    t = 0
    limit = min(n_rows, n_cols)
    while t < limit:
        best: tuple[int, int, int] | None = None
        for i in range(t, n_rows):
            row = A[i]
            for j in range(t, n_cols):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)

        while True:
            pivot = A[t][t]
            for i in range(t + 1, n_rows):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // pivot))
            for j in range(t + 1, n_cols):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // pivot))

            smallest: tuple[int, int, int] | None = None
            for i in range(t + 1, n_rows):
                if A[i][t] and (smallest is None or abs(A[i][t]) < smallest[0]):
                    smallest = (abs(A[i][t]), i, -1)
            for j in range(t + 1, n_cols):
                if A[t][j] and (smallest is None or abs(A[t][j]) < smallest[0]):
                    smallest = (abs(A[t][j]), -1, j)
            if smallest is not None:
                _, si, sj = smallest
                if si >= 0:
                    swap_rows(t, si)
                else:
                    swap_cols(t, sj)
                continue

            if keep_transforms:
                offender = next(
                    (i for i in range(t + 1, n_rows) if any(A[i][j] % pivot for j in range(t + 1, n_cols))),
                    None,
                )
                if offender is not None:
                    add_row(t, offender, 1)
                    continue
            break

        if A[t][t] < 0:
            negate_row(t)
        diagonal.append(A[t][t])
        t += 1

    return diagonal, U, V
