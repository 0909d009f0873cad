"""Homotopies for multi-term boundaries of distributive sets."""

from __future__ import annotations

from collections.abc import Sequence

from qhom.core.algebra import QUANDLE, QUASIGROUP, RACK, SHELF, DistributiveSet, validate
from qhom.core.chains import BasisTuple, Chain, MultiTermSpec, multi_term_boundary
from qhom.core.configuration.constants import DEFAULT_BUDGET, DEFAULT_SAMPLE_SEED
from qhom.core.errors import DegreeError, HypothesisError

from .identities import Case, check_clause, d_identity_clause, f_identity_clause, g_identity_clause
from .operators import d_operator, f_r, f_s, homotopy_D, homotopy_F
from .reports import VerificationReport
from .sampling import plan_basis

COEFFICIENT_SUM = "coefficient sum nonzero"
A0_ZERO = "a0 is zero"
FIRST_NOT_TRIVIAL = "first operation is not trivial"


def hypothesis_failures(dset: DistributiveSet, coeffs: Sequence[int]) -> list[HypothesisError]:
    """Every violated hypothesis of the multi-term annihilation theorem, in a fixed order."""
    failures: list[HypothesisError] = []
    if len(coeffs) != len(dset.ops):
        raise DegreeError(f"{len(coeffs)} coefficients for {len(dset.ops)} operations")
    total = sum(coeffs)
    if total != 0:
        failures.append(HypothesisError(COEFFICIENT_SUM, f"a0 + ... + ak = {total}"))
    if coeffs[0] == 0:
        failures.append(HypothesisError(A0_ZERO))
    if not dset.ops[0].is_trivial:
        failures.append(HypothesisError(FIRST_NOT_TRIVIAL))
    for k, op in enumerate(dset.ops[1:], start=1):
        report = validate(op)
        broken = [name for name in (SHELF, RACK, QUANDLE, QUASIGROUP) if not report.passed(name)]
        if broken:
            failures.append(
                HypothesisError(f"operation {k} is not a quasigroup quandle", f"{dset.labels[k]} fails {', '.join(broken)}")
            )
    return failures


def require_hypotheses(dset: DistributiveSet, coeffs: Sequence[int]) -> None:
    failures = hypothesis_failures(dset, coeffs)
    if failures:
        raise failures[0]


def multi_term_homotopies(
    s: DistributiveSet,
    coeffs: Sequence[int],
    j: int,
    t: BasisTuple,
) -> tuple[Chain, Chain]:
    """
    ``(D_n^j(t), F_n^j(t))`` for the multi-term boundary.

    The block sums are left unscaled: scaling by ``a0 + ... + ak`` would give
    zero under the hypotheses. With them ``d D + D d = (-1)^j a0 (f_s^j - f_r^j)``.
    """
    require_hypotheses(s, coeffs)
    return homotopy_D(s, j, t), homotopy_F(s, j, t)


def verify_multi_term_homotopy(
    spec: MultiTermSpec,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    sample: bool = False,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> VerificationReport:
    """
    Check the D, F and composite identities for ``d = sum_k a_k d^(*_k)``,
    each scaled by ``a0``, giving the homotopy between ``a0 |X| Id`` and
    ``a0 sum_y (y, ..., y)``. The literal reading with block sums scaled by
    ``a0 + ... + ak`` is reported as a finding.
    """
    if n < 1:
        raise DegreeError(f"degree must be at least 1, got {n}")
    dset, coeffs = spec.dset, spec.coeffs
    require_hypotheses(dset, coeffs)
    a0 = coeffs[0]
    plan = plan_basis(dset.size, n, budget=budget, sample=sample, seed=seed)
    report = VerificationReport(
        subject=spec.label,
        identity="multiterm",
        degree=n,
        basis_size=plan.total,
        evaluated=len(plan.basis),
        sampled=plan.sampled,
    )

    def boundary(c: Chain) -> Chain:
        return multi_term_boundary(spec, c)

    for j in range(1, n + 1):
        report.add(d_identity_clause(dset, boundary, j, plan.basis, scale=a0))
        report.add(f_identity_clause(dset, boundary, j, plan.basis, scale=a0))
    report.add(g_identity_clause(dset, boundary, plan.basis, scale=a0))

    scale = sum(coeffs)
    scaled_cases: list[Case] = []
    for j in range(1, n + 1):
        D = d_operator(dset, j)
        sign = (-1) ** j * a0
        scaled_cases.append(
            (
                f"j={j}",
                lambda t, j=j, D=D: scale * (boundary(homotopy_D(dset, j, t)) + D(boundary(Chain.basis(t)))),
                lambda t, j=j, sign=sign: sign * (f_s(dset, j, t) - f_r(dset, j, t)),
            )
        )
    report.add(
        check_clause(
            "scaled-by-coefficient-sum",
            plan.basis,
            scaled_cases,
            asserted=False,
            note=f"block sums scaled by a0 + ... + ak = {scale}",
        )
    )
    return report
