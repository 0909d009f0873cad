"""Exhaustive verification of the homotopy identities for quasigroup quandles."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Sequence

from qhom.core.algebra import FiniteQuandle
from qhom.core.chains import BasisTuple, Chain, face_of_chain, rack_boundary
from qhom.core.configuration.constants import DEFAULT_BUDGET, DEFAULT_SAMPLE_SEED
from qhom.core.errors import DegreeError

from .operators import (
    Sized,
    d_operator,
    f_operator,
    f_r,
    f_s,
    g_operator,
    homotopy_D,
    homotopy_F,
)
from .reports import ClauseResult, ClauseWitness, VerificationReport
from .sampling import BasisPlan, plan_basis

logger = logging.getLogger("qhom.homotopy")

Boundary = Callable[[Chain], Chain]
Side = Callable[[BasisTuple], Chain]
Case = tuple[str, Side, Side]

TRIVIAL_FACE = 0
STAR_FACE = 1


def check_clause(
    name: str,
    basis: Iterable[BasisTuple],
    cases: Sequence[Case],
    *,
    asserted: bool = True,
    note: str = "",
) -> ClauseResult:
    """Compare both sides of every case on every tuple; tuples outer, cases inner."""
    checked = 0
    for t in basis:
        checked += 1
        for case, lhs_fn, rhs_fn in cases:
            lhs, rhs = lhs_fn(t), rhs_fn(t)
            if lhs != rhs:
                witness = ClauseWitness(case, t, lhs, rhs)
                logger.info("clause %r fails at %s (%s)", name, t, case)
                return ClauseResult(name, False, checked, witness, asserted, note)
    return ClauseResult(name, True, checked, None, asserted, note)


def _report(label: str, identity: str, plan: BasisPlan) -> VerificationReport:
    return VerificationReport(
        subject=label,
        identity=identity,
        degree=plan.degree,
        basis_size=plan.total,
        evaluated=len(plan.basis),
        sampled=plan.sampled,
    )


def _face(quandle: FiniteQuandle, kind: int, i: int) -> Callable[[Chain], Chain]:
    op = quandle.op if kind == STAR_FACE else None
    return lambda c: face_of_chain(op, i, c)


def summation_lemmas(q: FiniteQuandle) -> list[ClauseResult]:
    """``sum_y x*y = sum_y y`` (needs a quasigroup) and ``sum_y y*x = sum_y y`` (holds in any rack)."""
    everything = Chain(1, {(y,): 1 for y in range(q.size)})
    elements = [(x,) for x in range(q.size)]
    left = check_clause(
        "sum over left translations",
        elements,
        [("sum_y x*y", lambda t: Chain.from_pairs(1, (((q(t[0], y),), 1) for y in range(q.size))), lambda t: everything)],
    )
    right = check_clause(
        "sum over right translations",
        elements,
        [("sum_y y*x", lambda t: Chain.from_pairs(1, (((q(y, t[0]),), 1) for y in range(q.size))), lambda t: everything)],
    )
    return [left, right]


def d_identity_clause(q: Sized, boundary: Boundary, j: int, basis: Iterable[BasisTuple], *, scale: int = 1) -> ClauseResult:
    """``d D^j + D^j d = (-1)^j scale (f_s^j - f_r^j)``."""
    D = d_operator(q, j)
    sign = (-1) ** j * scale
    return check_clause(
        f"dD^{j} + D^{j}d",
        basis,
        [
            (
                f"j={j}",
                lambda t: boundary(homotopy_D(q, j, t)) + D(boundary(Chain.basis(t))),
                lambda t: sign * (f_s(q, j, t) - f_r(q, j, t)),
            )
        ],
    )


def f_identity_clause(q: Sized, boundary: Boundary, j: int, basis: Iterable[BasisTuple], *, scale: int = 1) -> ClauseResult:
    """``d F^j + F^j d = (-1)^j scale (f_r^j - f_s^(j-1))``."""
    F = f_operator(q, j)
    sign = (-1) ** j * scale
    return check_clause(
        f"dF^{j} + F^{j}d",
        basis,
        [
            (
                f"j={j}",
                lambda t: boundary(homotopy_F(q, j, t)) + F(boundary(Chain.basis(t))),
                lambda t: sign * (f_r(q, j, t) - f_s(q, j - 1, t)),
            )
        ],
    )


def g_identity_clause(q: Sized, boundary: Boundary, basis: Iterable[BasisTuple], *, scale: int = 1) -> ClauseResult:
    """``d G_n + G_(n-1) d = scale (f_s^n - |Q| Id)``."""
    G = g_operator(q)
    return check_clause(
        "dG + Gd",
        basis,
        [
            (
                "G",
                lambda t: boundary(G.apply(t)) + G(boundary(Chain.basis(t))),
                lambda t: scale * (f_s(q, len(t), t) - Chain.basis(t, q.size)),
            )
        ],
    )


def _check_j(j: int, n: int) -> None:
    if n < 1:
        raise DegreeError(f"degree must be at least 1, got {n}")
    if not 1 <= j <= n:
        raise DegreeError(f"homotopy index {j} outside 1..{n}")


def _rack(q: FiniteQuandle) -> Boundary:
    return lambda c: rack_boundary(q, c)


def verify_homotopy_identity_D(
    q: FiniteQuandle,
    j: int,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    sample: bool = False,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> VerificationReport:
    """
    Check ``d D_n^j + D_(n-1)^j d = (-1)^j (f_s^j - f_r^j)`` on every degree-``n`` tuple.

    The summation lemmas are reported alongside, so a failure on a
    non-quasigroup quandle shows which one broke.
    """
    _check_j(j, n)
    plan = plan_basis(q.size, n, budget=budget, sample=sample, seed=seed)
    report = _report(q.label, f"D^{j}", plan)
    for lemma in summation_lemmas(q):
        report.add(lemma)
    report.add(d_identity_clause(q, _rack(q), j, plan.basis))
    return report


def verify_homotopy_identity_F(
    q: FiniteQuandle,
    j: int,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    sample: bool = False,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> VerificationReport:
    """
    Check ``d F_n^j + F_(n-1)^j d = (-1)^j (f_r^j - f_s^(j-1))``.

    The slot of ``y`` in ``F`` is pinned first by the anchors
    ``d_j^trivial F^j = f_r^j`` and ``d_j^star F^j = f_s^(j-1)``.
    """
    _check_j(j, n)
    plan = plan_basis(q.size, n, budget=budget, sample=sample, seed=seed)
    report = _report(q.label, f"F^{j}", plan)
    for lemma in summation_lemmas(q):
        report.add(lemma)
    for clause in anchor_clauses(q, j, plan.basis):
        report.add(clause)
    report.add(f_identity_clause(q, _rack(q), j, plan.basis))
    return report


def anchor_clauses(q: FiniteQuandle, j: int, basis: Sequence[BasisTuple]) -> list[ClauseResult]:
    trivial_face = _face(q, TRIVIAL_FACE, j)
    star_face = _face(q, STAR_FACE, j)
    return [
        check_clause(
            f"anchor d_{j}^0 F^{j} = f_r^{j}",
            basis,
            [(f"j={j}", lambda t: trivial_face(homotopy_F(q, j, t)), lambda t: f_r(q, j, t))],
        ),
        check_clause(
            f"anchor d_{j}^1 F^{j} = f_s^{j - 1}",
            basis,
            [(f"j={j}", lambda t: star_face(homotopy_F(q, j, t)), lambda t: f_s(q, j - 1, t))],
        ),
    ]


def verify_composite_homotopy(
    q: FiniteQuandle,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    sample: bool = False,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> VerificationReport:
    """Check ``d G_n + G_(n-1) d = f_s^n - |Q| Id``."""
    if n < 1:
        raise DegreeError(f"degree must be at least 1, got {n}")
    plan = plan_basis(q.size, n, budget=budget, sample=sample, seed=seed)
    report = _report(q.label, "G", plan)
    for lemma in summation_lemmas(q):
        report.add(lemma)
    report.add(g_identity_clause(q, _rack(q), plan.basis))
    return report


def verify_chain_maps(
    q: FiniteQuandle,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    sample: bool = False,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> VerificationReport:
    """Check that ``f_r^j`` and ``f_s^j`` commute with the rack boundary for ``1 <= j <= n - 1``."""
    if n < 1:
        raise DegreeError(f"degree must be at least 1, got {n}")
    plan = plan_basis(q.size, n, budget=budget, sample=sample, seed=seed)
    report = _report(q.label, "chain maps", plan)
    boundary = _rack(q)
    for j in range(1, n):
        report.add(
            check_clause(
                f"d f_r^{j} = f_r^{j} d",
                plan.basis,
                [
                    (
                        f"j={j}",
                        lambda t, j=j: boundary(f_r(q, j, t)),
                        lambda t, j=j: boundary(Chain.basis(t)).map_linear(n - 1, lambda u: f_r(q, j, u)),
                    )
                ],
            )
        )
        report.add(
            check_clause(
                f"d f_s^{j} = f_s^{j} d",
                plan.basis,
                [
                    (
                        f"j={j}",
                        lambda t, j=j: boundary(f_s(q, j, t)),
                        lambda t, j=j: boundary(Chain.basis(t)).map_linear(n - 1, lambda u: f_s(q, j, u)),
                    )
                ],
            )
        )
    return report


def d_block(q: Sized, j: int, t: BasisTuple) -> Chain:
    """``sum_y (x_j, ..., x_j, y, x_{j+1}, ..., x_n)`` with ``j - 1`` copies of ``x_j``."""
    head = (t[j - 1],) * (j - 1)
    return Chain(len(t), {head + (y,) + t[j:]: 1 for y in range(q.size)})


def f_block(q: Sized, j: int, t: BasisTuple) -> Chain:
    """``sum_y (x_j, ..., x_j, y, x_j, x_{j+1}, ..., x_n)`` with ``j - 2`` leading copies."""
    x_j = t[j - 1]
    head = (x_j,) * (j - 2)
    return Chain(len(t), {head + (y, x_j) + t[j:]: 1 for y in range(q.size)})


def verify_corollary_identities(
    q: FiniteQuandle,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    sample: bool = False,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> VerificationReport:
    """
    Check the face/homotopy composition ledger behind the D and F identities.

    Each clause aggregates all admissible ``(i, j)`` and both face variants;
    a witness names the failing case. The two cross identities are checked
    as stated, and two nearby index variants are reported as findings.
    """
    if n < 1:
        raise DegreeError(f"degree must be at least 1, got {n}")
    plan = plan_basis(q.size, n, budget=budget, sample=sample, seed=seed)
    report = _report(q.label, "corollary", plan)
    basis = plan.basis
    kinds = (TRIVIAL_FACE, STAR_FACE)

    d_cases: list[Case] = []
    for j in range(1, n + 1):
        target = _bind_target(d_block, q, j)
        for i in range(1, j + 1):
            for e in kinds:
                d_cases.append((f"d_{i}^{e} D^{j}", _after(_face(q, e, i), q, homotopy_D, j), target))
        for i in range(1, j):
            for e in kinds:
                d_cases.append((f"D^{j - 1} d_{i}^{e}", _before(d_operator(q, j - 1), _face(q, e, i)), target))
        for e in kinds:
            d_cases.append((f"d_{j + 1}^{e} F^{j}", _after(_face(q, e, j + 1), q, homotopy_F, j), target))
    report.add(check_clause("faces collapse onto the D block", basis, d_cases))

    f_cases: list[Case] = []
    for j in range(2, n + 1):
        target = _bind_target(f_block, q, j)
        for i in range(1, j):
            for e in kinds:
                f_cases.append((f"d_{i}^{e} F^{j}", _after(_face(q, e, i), q, homotopy_F, j), target))
                f_cases.append((f"F^{j - 1} d_{i}^{e}", _before(f_operator(q, j - 1), _face(q, e, i)), target))
    report.add(check_clause("faces collapse onto the F block", basis, f_cases))

    report.add(
        check_clause(
            "star faces: d_(i+1)^1 D^i = d_(i+1)^1 F^(i+1)",
            basis,
            [
                (
                    f"i={i}",
                    _after(_face(q, STAR_FACE, i + 1), q, homotopy_D, i),
                    _after(_face(q, STAR_FACE, i + 1), q, homotopy_F, i + 1),
                )
                for i in range(1, n)
            ],
        )
    )
    report.add(
        check_clause(
            "trivial faces: d_(i+1)^0 D^i = d_i^0 F^i",
            basis,
            [
                (
                    f"i={i}",
                    _after(_face(q, TRIVIAL_FACE, i + 1), q, homotopy_D, i),
                    _after(_face(q, TRIVIAL_FACE, i), q, homotopy_F, i),
                )
                for i in range(1, n + 1)
            ],
        )
    )
    report.add(
        check_clause(
            "variant: d_(i+1)^1 D^i = d_(i+1)^1 F^i",
            basis,
            [
                (
                    f"i={i}",
                    _after(_face(q, STAR_FACE, i + 1), q, homotopy_D, i),
                    _after(_face(q, STAR_FACE, i + 1), q, homotopy_F, i),
                )
                for i in range(1, n + 1)
            ],
            asserted=False,
            note="index variant; recorded, not required",
        )
    )
    report.add(
        check_clause(
            "variant: d_(i+1)^0 D^i = d_(i+1)^0 F^(i+1)",
            basis,
            [
                (
                    f"i={i}",
                    _after(_face(q, TRIVIAL_FACE, i + 1), q, homotopy_D, i),
                    _after(_face(q, TRIVIAL_FACE, i + 1), q, homotopy_F, i + 1),
                )
                for i in range(1, n)
            ],
            asserted=False,
            note="index variant; recorded, not required",
        )
    )

    for name, homotopy, operator in (("D", homotopy_D, d_operator), ("F", homotopy_F, f_operator)):
        cases: list[Case] = []
        for j in range(1, n):
            for i in range(j + 1, n + 1):
                for e in kinds:
                    cases.append(
                        (
                            f"d_{i + 1}^{e} {name}^{j} vs {name}^{j} d_{i}^{e}",
                            _after(_face(q, e, i + 1), q, homotopy, j),
                            _before(operator(q, j), _face(q, e, i)),
                        )
                    )
        report.add(check_clause(f"high faces commute with {name}", basis, cases))
    return report


def _bind_target(block: Callable[[Sized, int, BasisTuple], Chain], q: Sized, j: int) -> Side:
    return lambda t: block(q, j, t)


def _after(
    face_map: Callable[[Chain], Chain],
    q: Sized,
    homotopy: Callable[[Sized, int, BasisTuple], Chain],
    j: int,
) -> Side:
    """``face o homotopy^j`` on a basis tuple."""
    return lambda t: face_map(homotopy(q, j, t))


def _before(operator: Callable[[Chain], Chain], face_map: Callable[[Chain], Chain]) -> Side:
    """``operator o face`` on a basis tuple."""
    return lambda t: operator(face_map(Chain.basis(t)))
