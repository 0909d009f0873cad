"""Integral homology through Smith normal form."""

from __future__ import annotations

from .groups import (
    FREE,
    HomologyGroup,
    ModularHomology,
    annihilation_exponent,
    check_complex,
    homology,
    homology_mod,
)
from .modular import PREPASS_PRIMES, predicted_ranks, rank_mod_p
from .smith import SmithDecomposition, canonical_invariant_factors, smith_normal_form

__all__ = [
    "FREE",
    "PREPASS_PRIMES",
    "HomologyGroup",
    "ModularHomology",
    "SmithDecomposition",
    "annihilation_exponent",
    "canonical_invariant_factors",
    "check_complex",
    "homology",
    "homology_mod",
    "predicted_ranks",
    "rank_mod_p",
    "smith_normal_form",
]
