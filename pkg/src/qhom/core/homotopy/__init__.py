"""Chain-level homotopy operators and their machine-checked identities."""

from __future__ import annotations

from .identities import (
    check_clause,
    summation_lemmas,
    verify_chain_maps,
    verify_composite_homotopy,
    verify_corollary_identities,
    verify_homotopy_identity_D,
    verify_homotopy_identity_F,
)
from .multiterm import hypothesis_failures, multi_term_homotopies, require_hypotheses, verify_multi_term_homotopy
from .operators import (
    ChainOperator,
    composite_homotopy_G,
    d_operator,
    f_operator,
    f_r,
    f_s,
    g_operator,
    homotopy_D,
    homotopy_F,
)
from .precubic import (
    PrecubicHomotopyData,
    PresimplicialHomotopyData,
    check_precubic_relations,
    prism_homotopy_data,
    rack_precubic_data,
    verify_precubic_homotopy,
    verify_presimplicial_homotopy,
)
from .reports import ClauseResult, ClauseWitness, VerificationReport
from .sampling import BasisPlan, plan_basis

__all__ = [
    "BasisPlan",
    "ChainOperator",
    "ClauseResult",
    "ClauseWitness",
    "PrecubicHomotopyData",
    "PresimplicialHomotopyData",
    "VerificationReport",
    "check_clause",
    "check_precubic_relations",
    "composite_homotopy_G",
    "d_operator",
    "f_operator",
    "f_r",
    "f_s",
    "g_operator",
    "homotopy_D",
    "homotopy_F",
    "hypothesis_failures",
    "multi_term_homotopies",
    "plan_basis",
    "prism_homotopy_data",
    "rack_precubic_data",
    "require_hypotheses",
    "summation_lemmas",
    "verify_chain_maps",
    "verify_composite_homotopy",
    "verify_corollary_identities",
    "verify_homotopy_identity_D",
    "verify_homotopy_identity_F",
    "verify_multi_term_homotopy",
    "verify_presimplicial_homotopy",
]
