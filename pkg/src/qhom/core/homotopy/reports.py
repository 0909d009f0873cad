"""Structured outcomes of identity verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from qhom.core.chains import BasisTuple, Chain


@dataclass(frozen=True)
class ClauseWitness:
    """The first failing basis tuple of a clause with both sides fully expanded."""

    case: str
    basis_tuple: BasisTuple
    lhs: Chain
    rhs: Chain

    def to_dict(self) -> dict[str, Any]:
        return {
            "case": self.case,
            "tuple": list(self.basis_tuple),
            "lhs": self.lhs.to_dict(),
            "rhs": self.rhs.to_dict(),
        }


@dataclass(frozen=True)
class ClauseResult:
    """
    One identity checked on a set of basis tuples.

    ``asserted`` clauses must hold for the report to pass; the others are
    findings recorded either way (index variants, literal readings).
    """

    name: str
    passed: bool
    checked: int
    witness: ClauseWitness | None = None
    asserted: bool = True
    note: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, Any]:
        return {
            "clause": self.name,
            "status": self.status,
            "asserted": self.asserted,
            "checked": self.checked,
            "witness": self.witness.to_dict() if self.witness else None,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    subject: str
    identity: str
    degree: int
    basis_size: int = 0
    evaluated: int = 0
    sampled: bool = False
    clauses: list[ClauseResult] = field(default_factory=list)

    def add(self, clause: ClauseResult) -> ClauseResult:
        self.clauses.append(clause)
        return clause

    def extend(self, other: VerificationReport) -> None:
        self.clauses.extend(other.clauses)
        self.sampled = self.sampled or other.sampled
        self.evaluated = max(self.evaluated, other.evaluated)
        self.basis_size = max(self.basis_size, other.basis_size)

    def clause(self, name: str) -> ClauseResult:
        for clause in self.clauses:
            if clause.name == name:
                return clause
        raise KeyError(name)

    @property
    def failures(self) -> list[ClauseResult]:
        return [clause for clause in self.clauses if clause.asserted and not clause.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def first_witness(self) -> ClauseWitness | None:
        for clause in self.failures:
            if clause.witness is not None:
                return clause.witness
        return None

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "identity": self.identity,
            "degree": self.degree,
            "basis_size": self.basis_size,
            "evaluated": self.evaluated,
            "sampled": self.sampled,
            "passed": self.passed,
            "clauses": [clause.to_dict() for clause in self.clauses],
        }
