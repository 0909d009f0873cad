"""Face maps and the one-term, rack and multi-term boundary operators."""

from __future__ import annotations

from collections import defaultdict
from typing import TYPE_CHECKING

from qhom.core.algebra import FiniteBinaryOp, FiniteQuandle
from qhom.core.errors import DegreeError

from .basis import BasisTuple
from .chain import Chain

if TYPE_CHECKING:
    from .complexes import MultiTermSpec


def face(op: FiniteBinaryOp | None, i: int, t: BasisTuple) -> BasisTuple:
    """
    ``d_i`` on a basis tuple, with ``i`` 1-based.

    ``op=None`` is the trivial variant (delete ``x_i``); otherwise the
    star variant ``(x_1*x_i, ..., x_{i-1}*x_i, x_{i+1}, ..., x_n)``.
    """
    n = len(t)
    if not 1 <= i <= n:
        raise DegreeError(f"face index {i} outside 1..{n}")
    x_i = t[i - 1]
    if op is None:
        head = t[: i - 1]
    else:
        head = tuple(op(x, x_i) for x in t[: i - 1])
    return head + t[i:]


def _face_sum(c: Chain, signed_faces: list[tuple[int, FiniteBinaryOp | None, int]]) -> Chain:
    acc: dict[BasisTuple, int] = defaultdict(int)
    for t, coefficient in c.items():
        for sign, op, i in signed_faces:
            acc[face(op, i, t)] += sign * coefficient
    return Chain(c.degree - 1, acc)


def one_term_boundary(op: FiniteBinaryOp | None, c: Chain) -> Chain:
    """``sum_{i=1}^n (-1)^i d_i`` for one operation; degree-1 chains map to the empty chain."""
    n = c.degree
    if n < 1:
        raise DegreeError("boundary needs degree >= 1")
    if n == 1:
        return Chain.zero(0)
    return _face_sum(c, [((-1) ** i, op, i) for i in range(1, n + 1)])


def rack_boundary(q: FiniteQuandle, c: Chain) -> Chain:
    """``sum_i (-1)^i (d_i^trivial - d_i^star)``; the ``i = 1`` term cancels identically."""
    n = c.degree
    if n < 1:
        raise DegreeError("boundary needs degree >= 1")
    if n == 1:
        return Chain.zero(0)
    faces: list[tuple[int, FiniteBinaryOp | None, int]] = []
    for i in range(2, n + 1):
        sign = (-1) ** i
        faces.append((sign, None, i))
        faces.append((-sign, q.op, i))
    return _face_sum(c, faces)


def multi_term_boundary(spec: MultiTermSpec, c: Chain) -> Chain:
    """``sum_k a_k * one_term_boundary(*_k)``."""
    n = c.degree
    if n < 1:
        raise DegreeError("boundary needs degree >= 1")
    if n == 1:
        return Chain.zero(0)
    faces: list[tuple[int, FiniteBinaryOp | None, int]] = []
    for op, a in zip(spec.dset.ops, spec.coeffs):
        if a == 0:
            continue
        for i in range(1, n + 1):
            faces.append((a * (-1) ** i, op, i))
    return _face_sum(c, faces)


def face_of_chain(op: FiniteBinaryOp | None, i: int, c: Chain) -> Chain:
    """Linear extension of :func:`face`."""
    return c.map_linear(c.degree - 1, lambda t: Chain.basis(face(op, i, t)))
