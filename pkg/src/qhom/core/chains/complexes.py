"""Boundary matrices of the rack, degenerate, quandle and multi-term complexes."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from qhom.core.algebra import DistributiveSet, FiniteQuandle, validate_distributive_set
from qhom.core.errors import AxiomError, BrokenComplexError, DegreeError, TableError

from .basis import BasisTuple, degenerate_tuples, is_degenerate, nondegenerate_tuples, rank, tuples
from .chain import Chain
from .faces import multi_term_boundary, rack_boundary
from .matrix import SparseIntMatrix

logger = logging.getLogger("qhom.chains")


@dataclass(frozen=True)
class MultiTermSpec:
    """Coefficients ``a_0..a_k`` aligned with the operations of a distributive set."""

    dset: DistributiveSet
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != len(self.dset.ops):
            raise TableError(f"{len(self.coeffs)} coefficients for {len(self.dset.ops)} operations")
        if any(not isinstance(a, int) or isinstance(a, bool) for a in self.coeffs):
            raise TableError("multi-term coefficients must be integers")

    @classmethod
    def validated(cls, dset: DistributiveSet, coeffs: Sequence[int]) -> MultiTermSpec:
        """Build a spec after checking every distributivity and quandle condition."""
        report = validate_distributive_set(dset)
        failure = report.first_failure()
        if failure is not None:
            raise AxiomError(f"distributive set fails {failure.name}: {failure.detail}", failure)
        return cls(dset, tuple(coeffs))

    @property
    def size(self) -> int:
        return self.dset.size

    @property
    def label(self) -> str:
        ops = ",".join(self.dset.labels)
        coeffs = ",".join(str(a) for a in self.coeffs)
        return f"({ops})[{coeffs}]"

    @property
    def key(self) -> str:
        digests = ",".join(op.sha256[:16] for op in self.dset.ops)
        return f"{digests}|{','.join(str(a) for a in self.coeffs)}"


class TheoryKind(str, Enum):
    RACK = "rack"
    DEGENERATE = "degenerate"
    QUANDLE = "quandle"
    REDUCED_QUANDLE = "reduced-quandle"
    MULTI_TERM = "multiterm"


@dataclass(frozen=True)
class ComplexTheory:
    kind: TheoryKind
    spec: MultiTermSpec | None = None

    def __post_init__(self) -> None:
        if (self.kind is TheoryKind.MULTI_TERM) != (self.spec is not None):
            raise TableError("a multi-term spec goes with the multiterm theory and only there")

    @classmethod
    def rack(cls) -> ComplexTheory:
        return cls(TheoryKind.RACK)

    @classmethod
    def degenerate(cls) -> ComplexTheory:
        return cls(TheoryKind.DEGENERATE)

    @classmethod
    def quandle(cls) -> ComplexTheory:
        return cls(TheoryKind.QUANDLE)

    @classmethod
    def reduced_quandle(cls) -> ComplexTheory:
        return cls(TheoryKind.REDUCED_QUANDLE)

    @classmethod
    def multi_term(cls, spec: MultiTermSpec) -> ComplexTheory:
        return cls(TheoryKind.MULTI_TERM, spec)

    @classmethod
    def parse(cls, name: str) -> ComplexTheory:
        """Resolve one of the single-quandle theory names used on the command line."""
        kind = TheoryKind(name)
        if kind is TheoryKind.MULTI_TERM:
            raise TableError("the multiterm theory needs a MultiTermSpec")
        return cls(kind)

    @property
    def key(self) -> str:
        if self.spec is not None:
            return f"{self.kind.value}:{self.spec.key}"
        return self.kind.value

    def __str__(self) -> str:
        if self.spec is not None:
            return f"multiterm{list(self.spec.coeffs)}"
        return self.kind.value


def chain_basis(size: int, theory: ComplexTheory, degree: int) -> list[BasisTuple]:
    """Ordered basis of ``C_degree`` for ``theory``; ``C_0`` is empty except for the reduced theory."""
    if degree == 0:
        return [()] if theory.kind is TheoryKind.REDUCED_QUANDLE else []
    if theory.kind is TheoryKind.DEGENERATE:
        return list(degenerate_tuples(size, degree))
    if theory.kind in (TheoryKind.QUANDLE, TheoryKind.REDUCED_QUANDLE):
        return list(nondegenerate_tuples(size, degree))
    return list(tuples(size, degree))


def boundary_matrix(
    source: FiniteQuandle | MultiTermSpec,
    theory: ComplexTheory,
    n: int,
) -> SparseIntMatrix:
    """
    Matrix of ``d_n: C_n -> C_{n-1}`` with columns and rows in lexicographic tuple order.

    Rack and multi-term theories use the full bases. The degenerate theory
    restricts to tuples with an adjacent repeat and raises BrokenComplexError
    if an image leaves that subcomplex. The quandle theories restrict to
    non-degenerate tuples and drop image coefficients on degenerate ones;
    the reduced variant replaces ``d_1 = 0`` by the augmentation ``x -> 1``.
    """
    if n < 1:
        raise DegreeError(f"no boundary in degree {n}; degrees start at 1")

    if theory.kind is TheoryKind.MULTI_TERM:
        spec = source if isinstance(source, MultiTermSpec) else theory.spec
        assert spec is not None
        size = spec.size

        def boundary(c: Chain) -> Chain:
            return multi_term_boundary(spec, c)
    else:
        if not isinstance(source, FiniteQuandle):
            raise TableError(f"the {theory} theory needs a quandle, got a multi-term spec")
        quandle = source
        size = quandle.size

        def boundary(c: Chain) -> Chain:
            return rack_boundary(quandle, c)

    col_basis = chain_basis(size, theory, n)
    row_basis = chain_basis(size, theory, n - 1)
    kind = theory.kind

    if n == 1:
        if kind is TheoryKind.REDUCED_QUANDLE:
            return SparseIntMatrix(1, len(col_basis), {(0, c): 1 for c in range(len(col_basis))})
        return SparseIntMatrix(0, len(col_basis))

    restricted = kind in (TheoryKind.DEGENERATE, TheoryKind.QUANDLE, TheoryKind.REDUCED_QUANDLE)
    row_index = {t: i for i, t in enumerate(row_basis)} if restricted else None

    columns: dict[int, dict[int, int]] = {}
    for c, t in enumerate(col_basis):
        image = boundary(Chain.basis(t))
        column: dict[int, int] = {}
        for u, coefficient in image.items():
            if row_index is None:
                column[rank(u, size)] = coefficient
            elif u in row_index:
                column[row_index[u]] = coefficient
            elif kind is TheoryKind.DEGENERATE and not is_degenerate(u):
                raise BrokenComplexError(
                    f"boundary of degenerate tuple {t} has coefficient {coefficient} on {u}",
                    column=c,
                )
        if column:
            columns[c] = column

    matrix = SparseIntMatrix.from_columns(len(row_basis), len(col_basis), columns)
    logger.debug("d_%d for %s: %dx%d, %d nonzeros", n, theory, matrix.rows, matrix.cols, matrix.nnz)
    return matrix
