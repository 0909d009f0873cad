"""Exhaustive or seeded-sample enumeration of basis tuples under a budget."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from qhom.core.chains import BasisTuple, is_degenerate, nondegenerate_count, tuples, unrank
from qhom.core.configuration.constants import DEFAULT_BUDGET, DEFAULT_SAMPLE_SEED
from qhom.core.errors import BudgetError

logger = logging.getLogger("qhom.homotopy")


@dataclass(frozen=True)
class BasisPlan:
    size: int
    degree: int
    total: int
    basis: tuple[BasisTuple, ...]

    @property
    def sampled(self) -> bool:
        return len(self.basis) < self.total


def plan_basis(
    size: int,
    degree: int,
    *,
    budget: int = DEFAULT_BUDGET,
    sample: bool = False,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> BasisPlan:
    """
    All degree-``degree`` tuples when they fit in ``budget``.

    Otherwise, with ``sample``, a ``random.Random(seed)`` sample of ``budget``
    tuples that always includes the first and last tuple, in ascending
    order. The remaining slots are split evenly between degenerate and
    nondegenerate tuples, a stratum smaller than its share giving the rest
    to the other. Without ``sample``, BudgetError.
    """
    total = size**degree
    if total <= budget:
        return BasisPlan(size, degree, total, tuple(tuples(size, degree)))
    if not sample:
        raise BudgetError(
            f"{total} basis tuples in degree {degree} exceed the budget of {budget}; pass --sample or raise --budget"
        )
    if budget < 2:
        raise BudgetError("sampling needs a budget of at least 2 tuples")
    chosen = _stratified_indices(random.Random(seed), size, degree, total, budget)
    logger.warning("sampling %d of %d basis tuples in degree %d (seed %d)", budget, total, degree, seed)
    return BasisPlan(size, degree, total, tuple(unrank(i, size, degree) for i in sorted(chosen)))


def _stratified_indices(rng: random.Random, size: int, degree: int, total: int, budget: int) -> set[int]:
    ends = {0, total - 1}
    degenerate_ends = sum(is_degenerate(unrank(i, size, degree)) for i in ends)
    available = {
        True: total - nondegenerate_count(size, degree) - degenerate_ends,
        False: nondegenerate_count(size, degree) - (len(ends) - degenerate_ends),
    }
    room = budget - len(ends)
    quota = {True: min(available[True], room // 2)}
    quota[False] = min(available[False], room - quota[True])
    quota[True] = min(available[True], room - quota[False])

    chosen = set(ends)
    filled = {True: 0, False: 0}
    for stratum in (True, False):
        if quota[stratum] and quota[stratum] == available[stratum]:
            chosen.update(i for i in range(1, total - 1) if is_degenerate(unrank(i, size, degree)) is stratum)
            filled[stratum] = quota[stratum]

    while filled[True] < quota[True] or filled[False] < quota[False]:
        index = rng.randrange(1, total - 1)
        if index in chosen:
            continue
        stratum = is_degenerate(unrank(index, size, degree))
        if filled[stratum] < quota[stratum]:
            chosen.add(index)
            filled[stratum] += 1
    logger.debug("stratified sample: %d degenerate, %d nondegenerate", filled[True], filled[False])
    return chosen
