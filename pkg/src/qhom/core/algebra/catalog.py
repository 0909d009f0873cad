"""Catalog of standard finite quandles, addressable by name."""

from __future__ import annotations

import math
import re
from collections.abc import Sequence
from itertools import product

from qhom.core.errors import AxiomError, ClosureError, TableError, UnknownQuandleError

from .operations import from_function, from_table
from .quandle import FiniteQuandle

KNOWN_FORMS = ("R<n>", "T(<n1>x<n2>x...)", "Alex(<n>,<t>)", "Triv(<n>)", "ConjS4T")

_DIHEDRAL = re.compile(r"^R(\d+)$")
_TAKASAKI = re.compile(r"^T\((\d+(?:x\d+)*)\)$")
_ALEXANDER = re.compile(r"^Alex\((\d+),\s*(-?\d+)\)$")
_TRIVIAL = re.compile(r"^Triv\((\d+)\)$")

Permutation = tuple[int, ...]


def dihedral(n: int) -> FiniteQuandle:
    """``R_n``: ``Z_n`` with ``a*b = 2b - a``, elements in natural order."""
    if n < 1:
        raise TableError(f"dihedral quandle needs n >= 1, got {n}")
    return FiniteQuandle.from_op(from_function(n, lambda a, b: (2 * b - a) % n), f"R{n}")


def takasaki(orders: Sequence[int]) -> FiniteQuandle:
    """
    ``T(G)`` for ``G = Z_{n1} x ... x Z_{nk}``.

    Elements are coordinate tuples enumerated lexicographically; ``a*b = 2b - a``
    componentwise.
    """
    if not orders:
        raise TableError("takasaki quandle needs at least one cyclic factor")
    if any(order < 1 for order in orders):
        raise TableError(f"cyclic factor orders must be positive, got {list(orders)}")
    elements = list(product(*(range(order) for order in orders)))
    index = {element: i for i, element in enumerate(elements)}

    def star(a: int, b: int) -> int:
        x, y = elements[a], elements[b]
        return index[tuple((2 * yi - xi) % order for xi, yi, order in zip(x, y, orders))]

    label = "T(" + "x".join(str(order) for order in orders) + ")"
    return FiniteQuandle.from_op(from_function(len(elements), star), label)


def alexander(n: int, t: int) -> FiniteQuandle:
    """One-variable Alexander quandle on ``Z_n``: ``a*b = t*a + (1 - t)*b``."""
    if n < 1:
        raise TableError(f"alexander quandle needs n >= 1, got {n}")
    if math.gcd(t, n) != 1:
        raise AxiomError(f"Alex({n},{t}): t must be a unit mod {n} (gcd(t, n) = {math.gcd(t, n)})")
    return FiniteQuandle.from_op(from_function(n, lambda a, b: (t * a + (1 - t) * b) % n), f"Alex({n},{t})")


def trivial(n: int) -> FiniteQuandle:
    """``a*b = a`` on ``n`` elements."""
    if n < 1:
        raise TableError(f"trivial quandle needs n >= 1, got {n}")
    return FiniteQuandle.from_op(from_function(n, lambda a, b: a), f"Triv({n})")


def _compose(first: Permutation, then: Permutation) -> Permutation:
    return tuple(then[i] for i in first)


def _invert(perm: Permutation) -> Permutation:
    inverse = [0] * len(perm)
    for i, image in enumerate(perm):
        inverse[image] = i
    return tuple(inverse)


def _conjugate(a: Permutation, b: Permutation) -> Permutation:
    # b^-1 a b, composing left to right.
    return _compose(_compose(_invert(b), a), b)


def conjugation(
    perm_generators: Sequence[Sequence[int]],
    class_elements: Sequence[Sequence[int]],
    *,
    label: str | None = None,
) -> FiniteQuandle:
    """
    Conjugation quandle ``a*b = b^-1 a b`` on ``class_elements``.

    Elements are indexed by their position in ``class_elements``. The class
    must be closed under conjugation by its own members and by every
    generator; the first violation is reported through ``ClosureError``.
    """
    members = [tuple(p) for p in class_elements]
    if not members:
        raise TableError("conjugation quandle needs a non-empty class")
    degree = len(members[0])
    for perm in [*members, *(tuple(g) for g in perm_generators)]:
        if len(perm) != degree or sorted(perm) != list(range(degree)):
            raise TableError(f"{list(perm)} is not a permutation of 0..{degree - 1}")
    if len(set(members)) != len(members):
        raise TableError("conjugation class lists an element twice")

    index = {perm: i for i, perm in enumerate(members)}
    entries = []
    for a, x in enumerate(members):
        row = []
        for b, y in enumerate(members):
            image = _conjugate(x, y)
            if image not in index:
                raise ClosureError(f"{list(image)} = b^-1 a b leaves the class", pair=(a, b))
            row.append(index[image])
        entries.append(row)
    for g, generator in enumerate(perm_generators):
        for a, x in enumerate(members):
            if _conjugate(x, tuple(generator)) not in index:
                raise ClosureError(f"conjugating element {a} by generator {g} leaves the class", pair=(a, g))

    name = label or f"Conj({len(members)} in S{degree})"
    return FiniteQuandle.from_op(from_table(len(members), entries), name)


def transpositions(m: int) -> list[Permutation]:
    """Transpositions of the symmetric group on ``m`` letters, ordered by ``(i, j)``."""
    result = []
    for i in range(m):
        for j in range(i + 1, m):
            perm = list(range(m))
            perm[i], perm[j] = j, i
            result.append(tuple(perm))
    return result


def conj_s4_transpositions() -> FiniteQuandle:
    """The 6 transpositions of ``S_4`` under conjugation (connected, not a quasigroup)."""
    generators = [(1, 0, 2, 3), (1, 2, 3, 0)]
    return conjugation(generators, transpositions(4), label="ConjS4T")


def by_name(name: str) -> FiniteQuandle:
    """Resolve a catalog name such as ``R3``, ``T(2x2)``, ``Alex(5,2)``, ``Triv(3)``, ``ConjS4T``."""
    text = name.strip()
    if text == "ConjS4T":
        return conj_s4_transpositions()
    if match := _DIHEDRAL.match(text):
        return dihedral(int(match.group(1)))
    if match := _TAKASAKI.match(text):
        return takasaki([int(part) for part in match.group(1).split("x")])
    if match := _ALEXANDER.match(text):
        return alexander(int(match.group(1)), int(match.group(2)))
    if match := _TRIVIAL.match(text):
        return trivial(int(match.group(1)))
    raise UnknownQuandleError(name, KNOWN_FORMS)
