"""Finite magmas, quandles and distributive sets."""

from __future__ import annotations

from .catalog import (
    KNOWN_FORMS,
    alexander,
    by_name,
    conj_s4_transpositions,
    conjugation,
    dihedral,
    takasaki,
    transpositions,
    trivial,
)
from .distributive import DistributiveSet, validate_distributive_set
from .io import load_table, parse_table_text, write_table
from .operations import (
    QUANDLE,
    QUASIGROUP,
    RACK,
    SHELF,
    AxiomCheck,
    AxiomReport,
    FiniteBinaryOp,
    from_function,
    from_table,
    trivial_op,
    validate,
)
from .quandle import FiniteQuandle, inner_group_order, orbits, relabel

__all__ = [
    "KNOWN_FORMS",
    "QUANDLE",
    "QUASIGROUP",
    "RACK",
    "SHELF",
    "AxiomCheck",
    "AxiomReport",
    "DistributiveSet",
    "FiniteBinaryOp",
    "FiniteQuandle",
    "alexander",
    "by_name",
    "conj_s4_transpositions",
    "conjugation",
    "dihedral",
    "from_function",
    "from_table",
    "inner_group_order",
    "load_table",
    "orbits",
    "parse_table_text",
    "relabel",
    "takasaki",
    "transpositions",
    "trivial",
    "trivial_op",
    "validate",
    "validate_distributive_set",
]
