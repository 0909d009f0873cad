"""Generic precubic and presimplicial homotopy checkers."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from itertools import product

from qhom.core.algebra import AxiomCheck, FiniteQuandle
from qhom.core.chains import BasisTuple, Chain, face
from qhom.core.configuration.constants import DEFAULT_BUDGET, DEFAULT_SAMPLE_SEED
from qhom.core.errors import AxiomError, DegreeError

from .identities import Case, check_clause
from .operators import f_s, homotopy_D, homotopy_F
from .reports import ClauseResult, VerificationReport
from .sampling import plan_basis

FaceFn = Callable[[int, BasisTuple], BasisTuple]
HomotopyFn = Callable[[int, BasisTuple], Chain]
MapFn = Callable[[BasisTuple], Chain]
ChainMap = Callable[[Chain], Chain]

KINDS = (0, 1)


def _lift_face(fn: FaceFn, i: int) -> ChainMap:
    return lambda c: c.map_linear(c.degree - 1, lambda t: Chain.basis(fn(i, t)))


def _lift_homotopy(fn: HomotopyFn, i: int) -> ChainMap:
    return lambda c: c.map_linear(c.degree + 1, lambda t: fn(i, t))


def _lift_map(fn: MapFn) -> ChainMap:
    return lambda c: c.map_linear(c.degree, fn)


def _on_basis(first: ChainMap, *rest: ChainMap) -> Callable[[BasisTuple], Chain]:
    """Compose right to left: ``_on_basis(a, b)(t) == a(b(t))``."""

    def run(t: BasisTuple) -> Chain:
        chain = Chain.basis(t)
        for step in reversed((first, *rest)):
            chain = step(chain)
        return chain

    return run


@dataclass(frozen=True)
class PrecubicHomotopyData:
    """
    Faces ``d_i^0, d_i^1`` and homotopies ``h_i^0, h_i^1`` (``i`` from 1) on
    ``Z X^n``, with endpoint maps ``f'`` and ``g'``.
    """

    label: str
    size: int
    face0: FaceFn
    face1: FaceFn
    h0: HomotopyFn
    h1: HomotopyFn
    f_prime: MapFn
    g_prime: MapFn

    def d(self, e: int, i: int) -> ChainMap:
        return _lift_face(self.face1 if e else self.face0, i)

    def h(self, e: int, i: int) -> ChainMap:
        return _lift_homotopy(self.h1 if e else self.h0, i)

    def boundary(self, c: Chain) -> Chain:
        """``sum_{i=1}^n (-1)^i (d_i^0 - d_i^1)``; zero below degree 2."""
        if c.degree <= 1:
            return Chain.zero(max(c.degree - 1, 0))
        total = Chain.zero(c.degree - 1)
        for i in range(1, c.degree + 1):
            total = total + (-1) ** i * (self.d(0, i)(c) - self.d(1, i)(c))
        return total

    def total_homotopy(self, c: Chain) -> Chain:
        """``H'_n = sum_{i=1}^n (-1)^i (h_i^0 + h_i^1)``."""
        total = Chain.zero(c.degree + 1)
        for i in range(1, c.degree + 1):
            total = total + (-1) ** i * (self.h(0, i)(c) + self.h(1, i)(c))
        return total


def rack_precubic_data(q: FiniteQuandle) -> PrecubicHomotopyData:
    """Trivial and star faces, ``h^0 = D``, ``h^1 = F``, ``f' = |Q| Id``, ``g' = f_s^n``."""
    return PrecubicHomotopyData(
        label=q.label,
        size=q.size,
        face0=lambda i, t: face(None, i, t),
        face1=lambda i, t: face(q.op, i, t),
        h0=lambda i, t: homotopy_D(q, i, t),
        h1=lambda i, t: homotopy_F(q, i, t),
        f_prime=lambda t: Chain.basis(t, q.size),
        g_prime=lambda t: f_s(q, len(t), t),
    )


def check_precubic_relations(data: PrecubicHomotopyData, basis: Iterable[BasisTuple]) -> ClauseResult:
    """``d_i^e d_j^f = d_(j-1)^f d_i^e`` for ``1 <= i < j <= n``, all four face pairs."""
    basis = list(basis)
    n = len(basis[0]) if basis else 0
    cases: list[Case] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for e, f in product(KINDS, repeat=2):
                cases.append(
                    (
                        f"d_{i}^{e} d_{j}^{f}",
                        _on_basis(data.d(e, i), data.d(f, j)),
                        _on_basis(data.d(f, j - 1), data.d(e, i)),
                    )
                )
    return check_clause(f"precubic relations in degree {n}", basis, cases)


def verify_precubic_homotopy(
    data: PrecubicHomotopyData,
    degree: int,
    *,
    budget: int = DEFAULT_BUDGET,
    sample: bool = False,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> VerificationReport:
    """
    Check the four precubic homotopy conditions in ``degree`` and then,
    independently, that ``d H' + H' d = g' - f'``.

    Face relations are checked first in ``degree`` and ``degree + 1``; a
    failure there raises AxiomError carrying the witness.
    """
    n = degree
    if n < 1:
        raise DegreeError(f"degree must be at least 1, got {n}")
    plan = plan_basis(data.size, n, budget=budget, sample=sample, seed=seed)
    upper = plan_basis(data.size, n + 1, budget=budget, sample=sample, seed=seed)
    report = VerificationReport(
        subject=data.label,
        identity="precubic",
        degree=n,
        basis_size=plan.total,
        evaluated=len(plan.basis),
        sampled=plan.sampled or upper.sampled,
    )

    for relations in (check_precubic_relations(data, plan.basis), check_precubic_relations(data, upper.basis)):
        report.add(relations)
        if not relations.passed:
            witness = relations.witness
            raise AxiomError(
                f"{data.label}: faces are not precubic ({witness.case if witness else relations.name})",
                AxiomCheck(relations.name, False, witness.basis_tuple if witness else None),
            )

    basis = plan.basis
    below: list[Case] = []
    for j in range(2, n + 1):
        for i in range(1, j):
            for e, f in product(KINDS, repeat=2):
                below.append(
                    (
                        f"d_{i}^{f} h_{j}^{e}",
                        _on_basis(data.d(f, i), data.h(e, j)),
                        _on_basis(data.h(e, j - 1), data.d(f, i)),
                    )
                )
    report.add(check_clause("faces below the homotopy index", basis, below))

    swap: list[Case] = []
    for i in range(1, n + 1):
        for e in KINDS:
            swap.append(
                (
                    f"d_{i}^{e} h_{i}^0 = d_{i + 1}^{e} h_{i}^1",
                    _on_basis(data.d(e, i), data.h(0, i)),
                    _on_basis(data.d(e, i + 1), data.h(1, i)),
                )
            )
        swap.append(
            (
                f"d_{i}^0 h_{i}^1 = d_{i + 1}^0 h_{i}^0",
                _on_basis(data.d(0, i), data.h(1, i)),
                _on_basis(data.d(0, i + 1), data.h(0, i)),
            )
        )
        if i >= 2:
            swap.append(
                (
                    f"d_{i}^1 h_{i}^1 = d_{i}^1 h_{i - 1}^0",
                    _on_basis(data.d(1, i), data.h(1, i)),
                    _on_basis(data.d(1, i), data.h(0, i - 1)),
                )
            )
    report.add(check_clause("faces at the homotopy index", basis, swap))

    above: list[Case] = []
    for j in range(1, n + 1):
        for i in range(j + 2, n + 2):
            for e, f in product(KINDS, repeat=2):
                above.append(
                    (
                        f"d_{i}^{f} h_{j}^{e}",
                        _on_basis(data.d(f, i), data.h(e, j)),
                        _on_basis(data.h(e, j), data.d(f, i - 1)),
                    )
                )
    report.add(check_clause("faces above the homotopy index", basis, above))

    report.add(
        check_clause(
            "endpoints",
            basis,
            [
                ("d_1^1 h_1^1 = f'", _on_basis(data.d(1, 1), data.h(1, 1)), data.f_prime),
                (f"d_{n + 1}^1 h_{n}^0 = g'", _on_basis(data.d(1, n + 1), data.h(0, n)), data.g_prime),
            ],
        )
    )

    report.add(
        check_clause(
            "chain homotopy d H' + H' d = g' - f'",
            basis,
            [
                (
                    "H'",
                    lambda t: data.boundary(data.total_homotopy(Chain.basis(t)))
                    + data.total_homotopy(data.boundary(Chain.basis(t))),
                    lambda t: data.g_prime(t) - data.f_prime(t),
                )
            ],
        )
    )
    return report


@dataclass(frozen=True)
class PresimplicialHomotopyData:
    """
    Faces ``d_i`` (``i`` from 0) on ``C_n = Z X^(n+1)``, homotopies
    ``h_i: C_n -> C_(n+1)`` for ``0 <= i <= n``, and endpoint maps ``f``, ``g``.
    """

    label: str
    size: int
    face: FaceFn
    homotopy: HomotopyFn
    f: MapFn
    g: MapFn

    def d(self, i: int) -> ChainMap:
        return _lift_face(self.face, i)

    def h(self, i: int) -> ChainMap:
        return _lift_homotopy(self.homotopy, i)

    def boundary(self, c: Chain) -> Chain:
        """``sum_{i=0}^n (-1)^i d_i`` on ``C_n``; ``C_0`` maps to zero."""
        n = c.degree - 1
        if n <= 0:
            return Chain.zero(max(c.degree - 1, 0))
        total = Chain.zero(c.degree - 1)
        for i in range(n + 1):
            total = total + (-1) ** i * self.d(i)(c)
        return total

    def total_homotopy(self, c: Chain) -> Chain:
        """``H_n = sum_{i=0}^n (-1)^i h_i``."""
        n = c.degree - 1
        total = Chain.zero(c.degree + 1)
        for i in range(n + 1):
            total = total + (-1) ** i * self.h(i)(c)
        return total


def _delete(i: int, t: BasisTuple) -> BasisTuple:
    return t[:i] + t[i + 1 :]


def prism_homotopy_data(phi: Sequence[int], psi: Sequence[int], *, label: str = "prism") -> PresimplicialHomotopyData:
    """
    Deletion faces on ``Z X^(n+1)`` with the prism homotopy
    ``h_i(x) = (psi x_0, ..., psi x_i, phi x_i, ..., phi x_n)`` between
    ``f = phi`` and ``g = psi`` applied entrywise.
    """
    if len(phi) != len(psi):
        raise DegreeError("phi and psi must act on the same set")
    size = len(phi)
    for fn in (phi, psi):
        if any(not 0 <= v < size for v in fn):
            raise DegreeError("phi and psi must map the set into itself")

    def homotopy(i: int, t: BasisTuple) -> Chain:
        return Chain.basis(tuple(psi[x] for x in t[: i + 1]) + tuple(phi[x] for x in t[i:]))

    return PresimplicialHomotopyData(
        label=label,
        size=size,
        face=_delete,
        homotopy=homotopy,
        f=lambda t: Chain.basis(tuple(phi[x] for x in t)),
        g=lambda t: Chain.basis(tuple(psi[x] for x in t)),
    )


def verify_presimplicial_homotopy(
    data: PresimplicialHomotopyData,
    degree: int,
    *,
    budget: int = DEFAULT_BUDGET,
    sample: bool = False,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> VerificationReport:
    """
    Check the presimplicial homotopy conditions on ``C_degree`` and the
    conclusion ``d H + H d = f - g``.
    """
    n = degree
    if n < 0:
        raise DegreeError(f"degree must be nonnegative, got {n}")
    plan = plan_basis(data.size, n + 1, budget=budget, sample=sample, seed=seed)
    upper = plan_basis(data.size, n + 2, budget=budget, sample=sample, seed=seed)
    report = VerificationReport(
        subject=data.label,
        identity="presimplicial",
        degree=n,
        basis_size=plan.total,
        evaluated=len(plan.basis),
        sampled=plan.sampled or upper.sampled,
    )
    basis = plan.basis

    for level, tuples_ in ((n, basis), (n + 1, upper.basis)):
        cases: list[Case] = [
            (f"d_{i} d_{j}", _on_basis(data.d(i), data.d(j)), _on_basis(data.d(j - 1), data.d(i)))
            for j in range(1, level + 1)
            for i in range(j)
        ]
        relations = report.add(check_clause(f"presimplicial relations in degree {level}", tuples_, cases))
        if not relations.passed:
            witness = relations.witness
            raise AxiomError(
                f"{data.label}: faces are not presimplicial ({witness.case if witness else relations.name})",
                AxiomCheck(relations.name, False, witness.basis_tuple if witness else None),
            )

    if n >= 1:
        report.add(
            check_clause(
                "f and g commute with faces",
                basis,
                [
                    (f"{name} d_{i}", _on_basis(_lift_map(fn), data.d(i)), _on_basis(data.d(i), _lift_map(fn)))
                    for name, fn in (("f", data.f), ("g", data.g))
                    for i in range(n + 1)
                ],
            )
        )

    report.add(
        check_clause(
            "faces below the homotopy index",
            basis,
            [
                (f"d_{i} h_{j}", _on_basis(data.d(i), data.h(j)), _on_basis(data.h(j - 1), data.d(i)))
                for j in range(1, n + 1)
                for i in range(j)
            ],
        )
    )
    report.add(
        check_clause(
            "faces at the homotopy index",
            basis,
            [(f"d_{i} h_{i}", _on_basis(data.d(i), data.h(i)), _on_basis(data.d(i), data.h(i - 1))) for i in range(1, n + 1)],
        )
    )
    report.add(
        check_clause(
            "faces above the homotopy index",
            basis,
            [
                (f"d_{i} h_{j}", _on_basis(data.d(i), data.h(j)), _on_basis(data.h(j), data.d(i - 1)))
                for j in range(n + 1)
                for i in range(j + 2, n + 2)
            ],
        )
    )
    report.add(
        check_clause(
            "endpoints",
            basis,
            [
                ("d_0 h_0 = f", _on_basis(data.d(0), data.h(0)), data.f),
                (f"d_{n + 1} h_{n} = g", _on_basis(data.d(n + 1), data.h(n)), data.g),
            ],
        )
    )
    report.add(
        check_clause(
            "chain homotopy d H + H d = f - g",
            basis,
            [
                (
                    "H",
                    lambda t: data.boundary(data.total_homotopy(Chain.basis(t)))
                    + data.total_homotopy(data.boundary(Chain.basis(t))),
                    lambda t: data.f(t) - data.g(t),
                )
            ],
        )
    )
    return report
