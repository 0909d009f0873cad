"""The chain maps and homotopy operators used in the annihilation argument."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Protocol

from qhom.core.chains import BasisTuple, Chain
from qhom.core.errors import DegreeError


class Sized(Protocol):
    @property
    def size(self) -> int: ...


@dataclass(frozen=True)
class ChainOperator:
    """A linear operator given on basis tuples; output degree = input degree + ``degree_shift``."""

    name: str
    degree_shift: int
    on_basis: Callable[[BasisTuple], Chain]

    def apply(self, t: BasisTuple) -> Chain:
        image = self.on_basis(t)
        if image and image.degree != len(t) + self.degree_shift:
            raise DegreeError(f"{self.name} sent a degree-{len(t)} tuple to degree {image.degree}")
        return image

    def __call__(self, c: Chain) -> Chain:
        return c.map_linear(c.degree + self.degree_shift, self.apply)


def _check_index(name: str, j: int, low: int, n: int) -> None:
    if not low <= j <= n:
        raise DegreeError(f"{name}: index {j} outside {low}..{n}")


def f_r(q: Sized, j: int, t: BasisTuple) -> Chain:
    """``|Q| (x_j, ..., x_j, x_{j+1}, ..., x_n)`` with ``j`` copies of ``x_j``."""
    _check_index("f_r", j, 1, len(t))
    x_j = t[j - 1]
    return Chain.basis((x_j,) * j + t[j:], q.size)


def f_s(q: Sized, j: int, t: BasisTuple) -> Chain:
    """``sum_y (y, ..., y, x_{j+1}, ..., x_n)`` with ``j`` copies of ``y``."""
    _check_index("f_s", j, 0, len(t))
    tail = t[j:]
    return Chain.from_pairs(len(t), (((y,) * j + tail, 1) for y in range(q.size)))


def homotopy_D(q: Sized, j: int, t: BasisTuple) -> Chain:
    """``sum_y (x_j, ..., x_j, y, x_{j+1}, ..., x_n)``: ``j`` copies of ``x_j``, then ``y``."""
    _check_index("D", j, 1, len(t))
    head = (t[j - 1],) * j
    tail = t[j:]
    return Chain(len(t) + 1, {head + (y,) + tail: 1 for y in range(q.size)})


def homotopy_F(q: Sized, j: int, t: BasisTuple) -> Chain:
    """``sum_y (x_j, ..., x_j, y, x_j, x_{j+1}, ..., x_n)``: ``j - 1`` copies, ``y`` in slot ``j``."""
    _check_index("F", j, 1, len(t))
    x_j = t[j - 1]
    head = (x_j,) * (j - 1)
    tail = (x_j,) + t[j:]
    return Chain(len(t) + 1, {head + (y,) + tail: 1 for y in range(q.size)})


def composite_homotopy_G(q: Sized, n: int, t: BasisTuple) -> Chain:
    """``G_n = sum_{j=1}^n (-1)^j (D_n^j + F_n^j)`` on a degree-``n`` tuple."""
    if len(t) != n:
        raise DegreeError(f"G_{n} applied to a tuple of degree {len(t)}")
    total = Chain.zero(n + 1)
    for j in range(1, n + 1):
        total = total + (-1) ** j * (homotopy_D(q, j, t) + homotopy_F(q, j, t))
    return total


# Operator forms used inside identities: D^j and F^j vanish on degrees below j.


def d_operator(q: Sized, j: int) -> ChainOperator:
    return ChainOperator(
        f"D^{j}", 1, lambda t: homotopy_D(q, j, t) if j <= len(t) else Chain.zero(len(t) + 1)
    )


def f_operator(q: Sized, j: int) -> ChainOperator:
    return ChainOperator(
        f"F^{j}", 1, lambda t: homotopy_F(q, j, t) if j <= len(t) else Chain.zero(len(t) + 1)
    )


def g_operator(q: Sized) -> ChainOperator:
    return ChainOperator("G", 1, lambda t: composite_homotopy_G(q, len(t), t))
