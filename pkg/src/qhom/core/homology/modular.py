"""Rank of sparse integer matrices over prime fields."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from qhom.core.chains import SparseIntMatrix

logger = logging.getLogger("qhom.homology")

PREPASS_PRIMES = (2_147_483_647, 1_000_000_007, 998_244_353)


def rank_mod_p(m: SparseIntMatrix, p: int) -> int:
    """Gaussian elimination over ``Z/p`` on the rows of ``m``; ``p`` must be prime."""
    pivots: dict[int, dict[int, int]] = {}
    for _, row in sorted(m.row_map().items()):
        vec = {c: v % p for c, v in row.items() if v % p}
        while vec:
            lead = min(vec)
            basis_row = pivots.get(lead)
            if basis_row is None:
                inverse = pow(vec[lead], -1, p)
                pivots[lead] = {c: v * inverse % p for c, v in vec.items()}
                break
            factor = vec[lead]
            for c, v in basis_row.items():
                new = (vec.get(c, 0) - factor * v) % p
                if new:
                    vec[c] = new
                else:
                    vec.pop(c, None)
    return len(pivots)


def predicted_ranks(m: SparseIntMatrix, primes: Sequence[int] = PREPASS_PRIMES) -> tuple[int, ...]:
    """Ranks modulo several large primes; they agree with the rational rank unless a prime divides a minor."""
    ranks = tuple(rank_mod_p(m, p) for p in primes)
    logger.debug("modular pre-pass on %dx%d: ranks %s", m.rows, m.cols, ranks)
    return ranks
