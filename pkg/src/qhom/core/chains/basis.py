"""Lexicographically ordered tuple bases of the chain groups."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import product

BasisTuple = tuple[int, ...]


def basis_size(size: int, degree: int) -> int:
    return size**degree


def rank(t: Sequence[int], size: int) -> int:
    """Index of ``t`` among all tuples of its degree in lexicographic order."""
    index = 0
    for entry in t:
        index = index * size + entry
    return index


def unrank(index: int, size: int, degree: int) -> BasisTuple:
    if not 0 <= index < size**degree:
        raise IndexError(f"index {index} outside 0..{size**degree - 1}")
    entries = [0] * degree
    for position in range(degree - 1, -1, -1):
        index, entries[position] = divmod(index, size)
    return tuple(entries)


def is_degenerate(t: Sequence[int]) -> bool:
    """True iff some adjacent pair of entries is equal."""
    return any(t[i] == t[i + 1] for i in range(len(t) - 1))


def tuples(size: int, degree: int) -> Iterator[BasisTuple]:
    return product(range(size), repeat=degree)


def degenerate_tuples(size: int, degree: int) -> Iterator[BasisTuple]:
    return (t for t in tuples(size, degree) if is_degenerate(t))


def nondegenerate_tuples(size: int, degree: int) -> Iterator[BasisTuple]:
    return (t for t in tuples(size, degree) if not is_degenerate(t))


def nondegenerate_count(size: int, degree: int) -> int:
    if degree == 0:
        return 1
    return size * (size - 1) ** (degree - 1)
