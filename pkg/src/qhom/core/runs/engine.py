"""Homology runs, theorem tables and identity verification behind the CLI."""

from __future__ import annotations

import asyncio
import hashlib
import logging
import math
import re
import time
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Any

from qhom.core.algebra import QUASIGROUP, FiniteQuandle, conj_s4_transpositions, inner_group_order
from qhom.core.chains import ComplexTheory, MultiTermSpec, boundary_matrix
from qhom.core.configuration.constants import DEFAULT_BUDGET, DEFAULT_SAMPLE_SEED
from qhom.core.errors import AxiomError, DegreeError
from qhom.core.homology import HomologyGroup, homology
from qhom.core.homology.smith import PivotStrategy
from qhom.core.homotopy import (
    VerificationReport,
    prism_homotopy_data,
    rack_precubic_data,
    require_hypotheses,
    verify_chain_maps,
    verify_composite_homotopy,
    verify_corollary_identities,
    verify_homotopy_identity_D,
    verify_homotopy_identity_F,
    verify_multi_term_homotopy,
    verify_precubic_homotopy,
    verify_presimplicial_homotopy,
)

from .cache import ResultCache
from .records import ResultRecord, RunConfig

logger = logging.getLogger("qhom.runs")

Source = FiniteQuandle | MultiTermSpec

YES = "yes"
NO = "no"
NOT_APPLICABLE = "N-A"

EXPLORATORY_DEGREE = 3
EXPLORATORY_CANDIDATE = HomologyGroup(0, (24,))

_DIHEDRAL_LABEL = re.compile(r"^R(\d+)$")


def source_sha256(source: Source) -> str:
    if isinstance(source, MultiTermSpec):
        return hashlib.sha256(source.key.encode("utf-8")).hexdigest()
    return source.op.sha256


def _divides(d: int, exponent: int | str) -> bool:
    return exponent == "free" or (isinstance(exponent, int) and d % exponent == 0)


def _flag(value: bool) -> str:
    return YES if value else NO


class HomologyEngine:
    """
    Computes ``H_n`` per degree, reusing cached records.

    Degrees missing from the cache run concurrently up to ``jobs`` at a
    time; results always come back in degree order.
    """

    def __init__(
        self,
        *,
        cache: ResultCache | None = None,
        jobs: int = 1,
        strategy: PivotStrategy = "markowitz",
    ) -> None:
        self.cache = cache
        self.jobs = max(1, jobs)
        self.strategy = strategy

    def compute_group(self, source: Source, theory: ComplexTheory, n: int) -> HomologyGroup:
        if n < 1:
            raise DegreeError(f"homology degrees start at 1, got {n}")
        boundary_out = boundary_matrix(source, theory, n)
        boundary_in = boundary_matrix(source, theory, n + 1)
        return homology(boundary_out, boundary_in, strategy=self.strategy)

    def _compute_record(self, source: Source, theory: ComplexTheory, n: int) -> ResultRecord:
        started = time.perf_counter()
        group = self.compute_group(source, theory, n)
        elapsed = int(round((time.perf_counter() - started) * 1000))
        logger.info("H_%d(%s; %s) = %s in %d ms", n, source.label, theory, group, elapsed)
        return ResultRecord.from_group(
            label=source.label,
            size=source.size,
            table_sha256=source_sha256(source),
            theory=str(theory),
            degree=n,
            group=group,
            ms=elapsed,
        )

    async def _compute_missing(self, source: Source, theory: ComplexTheory, degrees: Sequence[int]) -> list[ResultRecord]:
        semaphore = asyncio.Semaphore(self.jobs)

        async def run_one(n: int) -> ResultRecord:
            async with semaphore:
                return await asyncio.to_thread(self._compute_record, source, theory, n)

        return list(await asyncio.gather(*(run_one(n) for n in degrees)))

    def records(self, source: Source, theory: ComplexTheory, degrees: Iterable[int]) -> list[ResultRecord]:
        wanted = list(degrees)
        sha = source_sha256(source)
        found: dict[int, ResultRecord] = {}
        if self.cache is not None:
            for n in wanted:
                hit = self.cache.get(sha, theory.key, n)
                if hit is not None:
                    found[n] = hit

        missing = [n for n in wanted if n not in found]
        if missing:
            if self.jobs == 1:
                computed = [self._compute_record(source, theory, n) for n in missing]
            else:
                computed = asyncio.run(self._compute_missing(source, theory, missing))
            for record in computed:
                found[record.degree] = record
                if self.cache is not None:
                    self.cache.put(record, theory.key)
        return [found[n] for n in wanted]


def engine_for(config: RunConfig, *, strategy: PivotStrategy = "markowitz") -> HomologyEngine:
    cache = ResultCache(config.cache_dir) if config.cache_dir is not None else None
    return HomologyEngine(cache=cache, jobs=config.jobs, strategy=strategy)


def run_homology(source: Source, config: RunConfig, *, engine: HomologyEngine | None = None) -> list[ResultRecord]:
    """All records of ``config.degrees`` after the size guards pass."""
    config.check_size(source.size)
    return (engine or engine_for(config)).records(source, config.theory, config.degrees)


# ----------------------------------------------------------------------
# Annihilation theorem tables
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class TheoremRow:
    """
    One degree of one quandle checked against the ``|Q|`` annihilation bound.

    ``divides_q`` is ``N-A`` for quandles that are not quasigroups; those
    rows carry the ``|Q|!`` and inner group comparisons instead.
    """

    record: ResultRecord
    quasigroup: bool
    divides_q: str
    divides_q_pow_n: str
    divides_factorial: str = NOT_APPLICABLE
    inner_order: int | None = None
    divides_inner: str = NOT_APPLICABLE
    notes: tuple[str, ...] = ()

    @property
    def violation(self) -> bool:
        return self.divides_q == NO

    def to_dict(self) -> dict[str, Any]:
        data = self.record.to_dict()
        data.update(
            {
                "quasigroup": self.quasigroup,
                "divides_q": self.divides_q,
                "divides_q_pow_n": self.divides_q_pow_n,
                "divides_factorial": self.divides_factorial,
                "inner_group_order": self.inner_order,
                "divides_inner": self.divides_inner,
                "notes": list(self.notes),
            }
        )
        return data


def _dihedral_notes(label: str, exponent: int | str) -> tuple[str, ...]:
    match = _DIHEDRAL_LABEL.match(label)
    if match is None or int(match.group(1)) % 2:
        return ()
    k = int(match.group(1)) // 2
    return (f"exponent divides k={k}: {_flag(_divides(k, exponent))}", f"divides 2k={2 * k}: {_flag(_divides(2 * k, exponent))}")


def theorem_rows(quandles: Sequence[FiniteQuandle], config: RunConfig, *, engine: HomologyEngine | None = None) -> list[TheoremRow]:
    """Homology records of every quandle in ``config.degrees`` with the bound columns filled in."""
    for q in quandles:
        config.check_size(q.size)
    engine = engine or engine_for(config)

    rows: list[TheoremRow] = []
    for q in quandles:
        inner: int | None = None
        if not q.quasigroup:
            inner = inner_group_order(q)
        for record in engine.records(q, config.theory, config.degrees):
            exponent = record.exponent
            pow_n = _flag(_divides(q.size**record.degree, exponent))
            if q.quasigroup:
                row = TheoremRow(record, True, _flag(_divides(q.size, exponent)), pow_n)
                if row.violation:
                    logger.error("exponent %s of H_%d(%s) does not divide |Q| = %d", exponent, record.degree, q.label, q.size)
            else:
                assert inner is not None
                row = TheoremRow(
                    record,
                    False,
                    NOT_APPLICABLE,
                    pow_n,
                    divides_factorial=_flag(_divides(math.factorial(q.size), exponent)),
                    inner_order=inner,
                    divides_inner=_flag(_divides(inner, exponent)),
                    notes=_dihedral_notes(q.label, exponent),
                )
            rows.append(row)
    return rows


@dataclass(frozen=True)
class ExploratoryFinding:
    """``H_3^Q`` of the six-transposition conjugation quandle against the ``Z/24`` candidate."""

    record: ResultRecord
    matches_candidate: bool
    inner_order: int
    annihilated_by_inner: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "record": self.record.to_dict(),
            "candidate": str(EXPLORATORY_CANDIDATE),
            "matches_candidate": self.matches_candidate,
            "inner_group_order": self.inner_order,
            "annihilated_by_inner": self.annihilated_by_inner,
        }


def explore_transposition_quandle(engine: HomologyEngine | None = None) -> ExploratoryFinding:
    q = conj_s4_transpositions()
    engine = engine or HomologyEngine()
    (record,) = engine.records(q, ComplexTheory.quandle(), [EXPLORATORY_DEGREE])
    inner = inner_group_order(q)
    finding = ExploratoryFinding(
        record=record,
        matches_candidate=record.group == EXPLORATORY_CANDIDATE,
        inner_order=inner,
        annihilated_by_inner=_divides(inner, record.exponent),
    )
    if not finding.matches_candidate:
        logger.warning(
            "H_%d^Q(%s) = %s differs from the candidate %s",
            EXPLORATORY_DEGREE,
            q.label,
            record.group,
            EXPLORATORY_CANDIDATE,
        )
    return finding


# ----------------------------------------------------------------------
# Multi-term tables
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class MultiTermRow:
    record: ResultRecord
    bound: int
    divides_bound: str

    @property
    def violation(self) -> bool:
        return self.divides_bound == NO

    def to_dict(self) -> dict[str, Any]:
        data = self.record.to_dict()
        data.update({"bound": self.bound, "divides_bound": self.divides_bound})
        return data


def multi_term_rows(spec: MultiTermSpec, config: RunConfig, *, engine: HomologyEngine | None = None) -> list[MultiTermRow]:
    """
    Multi-term homology per degree with the exponent compared to ``a0 |X|``.

    The theorem hypotheses are required up front; a violation raises
    HypothesisError naming it.
    """
    require_hypotheses(spec.dset, spec.coeffs)
    config.check_size(spec.size)
    bound = abs(spec.coeffs[0]) * spec.size
    rows = []
    for record in (engine or engine_for(config)).records(spec, ComplexTheory.multi_term(spec), config.degrees):
        row = MultiTermRow(record, bound, _flag(_divides(bound, record.exponent)))
        if row.violation:
            logger.error("exponent %s of multi-term H_%d does not divide %d", record.exponent, record.degree, bound)
        rows.append(row)
    return rows


# ----------------------------------------------------------------------
# Identity verification
# ----------------------------------------------------------------------
class Identity(str, Enum):
    D = "D"
    F = "F"
    G = "G"
    COROLLARY = "corollary"
    PRECUBIC = "precubic"
    CHAIN_MAPS = "chain-maps"
    PRISM = "prism"


QUASIGROUP_IDENTITIES = frozenset({Identity.D, Identity.F, Identity.G})

IndexedVerifier = Callable[..., VerificationReport]


@dataclass(frozen=True)
class VerifyOptions:
    budget: int = DEFAULT_BUDGET
    sample: bool = False
    seed: int = DEFAULT_SAMPLE_SEED
    j: int | None = None
    expect_failure: bool = False

    @property
    def kwargs(self) -> dict[str, Any]:
        return {"budget": self.budget, "sample": self.sample, "seed": self.seed}


def _indexed(verify: IndexedVerifier, q: FiniteQuandle, n: int, options: VerifyOptions, name: str) -> VerificationReport:
    if options.j is not None:
        return verify(q, options.j, n, **options.kwargs)
    report = verify(q, 1, n, **options.kwargs)
    for j in range(2, n + 1):
        part = verify(q, j, n, **options.kwargs)
        seen = {clause.name for clause in report.clauses}
        part.clauses = [clause for clause in part.clauses if clause.name not in seen]
        report.extend(part)
    report.identity = f"{name}^1..{n}" if n > 1 else report.identity
    return report


def verify_identity(q: FiniteQuandle, identity: Identity, degree: int, options: VerifyOptions) -> VerificationReport:
    """
    Run one identity family on ``q`` in ``degree``.

    The D, F and G identities need a quasigroup quandle unless a failure
    is expected; otherwise AxiomError is raised before any evaluation.
    """
    if identity in QUASIGROUP_IDENTITIES and not q.quasigroup and not options.expect_failure:
        raise AxiomError(
            f"{q.label} is not a quasigroup; the {identity.value} identity needs one (pass --expect-failure for a negative control)",
            q.report().get(QUASIGROUP),
        )
    if identity is Identity.D:
        return _indexed(verify_homotopy_identity_D, q, degree, options, "D")
    if identity is Identity.F:
        return _indexed(verify_homotopy_identity_F, q, degree, options, "F")
    if identity is Identity.G:
        return verify_composite_homotopy(q, degree, **options.kwargs)
    if identity is Identity.COROLLARY:
        return verify_corollary_identities(q, degree, **options.kwargs)
    if identity is Identity.PRECUBIC:
        return verify_precubic_homotopy(rack_precubic_data(q), degree, **options.kwargs)
    if identity is Identity.CHAIN_MAPS:
        return verify_chain_maps(q, degree, **options.kwargs)
    # Prism homotopy between the identity and the right translation by the first element.
    psi = [q(x, 0) for x in q.op.elements()]
    data = prism_homotopy_data(list(q.op.elements()), psi, label=f"prism({q.label}; id, *0)")
    return verify_presimplicial_homotopy(data, degree, **options.kwargs)


def verify_multi_term(spec: MultiTermSpec, degree: int, options: VerifyOptions) -> VerificationReport:
    return verify_multi_term_homotopy(spec, degree, **options.kwargs)


def unexpected_outcome(report: VerificationReport, *, expect_failure: bool) -> bool:
    """True when the report's verdict disagrees with what the caller expected."""
    return report.passed if expect_failure else not report.passed
