"""Tuple bases, chains, face maps and boundary matrices."""

from __future__ import annotations

from .basis import (
    BasisTuple,
    basis_size,
    degenerate_tuples,
    is_degenerate,
    nondegenerate_count,
    nondegenerate_tuples,
    rank,
    tuples,
    unrank,
)
from .chain import Chain
from .complexes import ComplexTheory, MultiTermSpec, TheoryKind, boundary_matrix, chain_basis
from .faces import face, face_of_chain, multi_term_boundary, one_term_boundary, rack_boundary
from .matrix import SparseIntMatrix

__all__ = [
    "BasisTuple",
    "Chain",
    "ComplexTheory",
    "MultiTermSpec",
    "SparseIntMatrix",
    "TheoryKind",
    "basis_size",
    "boundary_matrix",
    "chain_basis",
    "degenerate_tuples",
    "face",
    "face_of_chain",
    "is_degenerate",
    "multi_term_boundary",
    "nondegenerate_count",
    "nondegenerate_tuples",
    "one_term_boundary",
    "rack_boundary",
    "rank",
    "tuples",
    "unrank",
]
