"""Formal integer linear combinations of basis tuples."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Callable, Iterable, Iterator, Mapping
from typing import Any

from qhom.core.errors import DegreeError

from .basis import BasisTuple


class Chain:
    """
    An element of ``Z Q^n``.

    Immutable once built; zero coefficients are never stored and every tuple
    has length ``degree``.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[BasisTuple, int] | None = None) -> None:
        if degree < 0:
            raise DegreeError(f"chain degree must be nonnegative, got {degree}")
        cleaned: dict[BasisTuple, int] = {}
        for t, coefficient in (terms or {}).items():
            if len(t) != degree:
                raise DegreeError(f"tuple {t} does not have degree {degree}")
            if coefficient:
                cleaned[tuple(t)] = coefficient
        self.degree = degree
        self._terms = cleaned

    @classmethod
    def basis(cls, t: Iterable[int], coefficient: int = 1) -> Chain:
        key = tuple(t)
        return cls(len(key), {key: coefficient})

    @classmethod
    def zero(cls, degree: int) -> Chain:
        return cls(degree)

    @classmethod
    def from_pairs(cls, degree: int, pairs: Iterable[tuple[BasisTuple, int]]) -> Chain:
        """Sum repeated tuples while building."""
        acc: dict[BasisTuple, int] = defaultdict(int)
        for t, coefficient in pairs:
            acc[t] += coefficient
        return cls(degree, acc)

    def coefficient(self, t: BasisTuple) -> int:
        return self._terms.get(tuple(t), 0)

    def support(self) -> list[BasisTuple]:
        return sorted(self._terms)

    def items(self) -> list[tuple[BasisTuple, int]]:
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[BasisTuple, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.degree == other.degree and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def _combine(self, other: Chain, sign: int) -> Chain:
        if not other._terms:
            return self
        if not self._terms:
            return other if sign == 1 else -other
        if self.degree != other.degree:
            raise DegreeError(f"cannot combine chains of degree {self.degree} and {other.degree}")
        acc = dict(self._terms)
        for t, coefficient in other._terms.items():
            acc[t] = acc.get(t, 0) + sign * coefficient
        return Chain(self.degree, acc)

    def __add__(self, other: Chain) -> Chain:
        return self._combine(other, 1)

    def __sub__(self, other: Chain) -> Chain:
        return self._combine(other, -1)

    def __neg__(self) -> Chain:
        return Chain(self.degree, {t: -c for t, c in self._terms.items()})

    def __mul__(self, scalar: int) -> Chain:
        return Chain(self.degree, {t: scalar * c for t, c in self._terms.items()})

    __rmul__ = __mul__

    def map_linear(self, out_degree: int, fn: Callable[[BasisTuple], Chain]) -> Chain:
        """Linear extension of ``fn`` from basis tuples to this chain."""
        acc: dict[BasisTuple, int] = defaultdict(int)
        for t, coefficient in self._terms.items():
            image = fn(t)
            for u, c in image._terms.items():
                acc[u] += coefficient * c
        return Chain(out_degree, acc)

    def to_dict(self) -> dict[str, Any]:
        return {"degree": self.degree, "terms": [[list(t), c] for t, c in self.items()]}

    def __repr__(self) -> str:
        return f"Chain({self.degree}, {dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for t, c in self.items():
            body = "(" + ",".join(str(x) for x in t) + ")"
            magnitude = abs(c)
            term = body if magnitude == 1 else f"{magnitude}{body}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)
