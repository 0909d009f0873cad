"""Homology groups computed from consecutive boundary matrices."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Literal

from sympy import factorint

from qhom.core.chains import SparseIntMatrix
from qhom.core.errors import BrokenComplexError, ComposabilityError, RankMismatchError

from .modular import predicted_ranks
from .smith import PivotStrategy, smith_normal_form

logger = logging.getLogger("qhom.homology")

FREE: Literal["free"] = "free"


@dataclass(frozen=True)
class HomologyGroup:
    """``Z^free_rank + Z/t_1 + ... + Z/t_k`` with ``1 < t_1 | t_2 | ... | t_k``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError(f"free rank must be nonnegative, got {self.free_rank}")
        for i, t in enumerate(self.torsion):
            if t <= 1:
                raise ValueError(f"torsion coefficients must exceed 1, got {t}")
            if i and t % self.torsion[i - 1]:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def primary_decomposition(self) -> tuple[int, ...]:
        """Prime-power orders of the cyclic torsion summands, sorted."""
        powers = [int(p) ** int(e) for t in self.torsion for p, e in factorint(t).items()]
        return tuple(sorted(powers))

    def to_dict(self) -> dict[str, Any]:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ModularHomology:
    """Structure of ``H_n(C; Z/m)`` as a sum of cyclic ``Z/m``-modules."""

    modulus: int
    factors: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.factors)

    def to_dict(self) -> dict[str, Any]:
        return {"modulus": self.modulus, "dimension": self.dimension, "factors": list(self.factors)}


def check_complex(boundary_out: SparseIntMatrix, boundary_in: SparseIntMatrix) -> None:
    """Raise unless ``boundary_out @ boundary_in`` is defined and zero."""
    if boundary_out.cols != boundary_in.rows:
        raise ComposabilityError(
            f"d_n has {boundary_out.cols} columns but d_(n+1) has {boundary_in.rows} rows"
        )
    column = boundary_out.first_nonzero_product_column(boundary_in)
    if column is not None:
        raise BrokenComplexError(f"d_n d_(n+1) is nonzero on column {column}", column=column)


def homology(
    boundary_out: SparseIntMatrix,
    boundary_in: SparseIntMatrix,
    *,
    strategy: PivotStrategy = "markowitz",
    prepass: bool = False,
) -> HomologyGroup:
    """
    ``ker d_n / im d_(n+1)``.

    free rank = ``cols(d_n) - rank d_n - rank d_(n+1)``; torsion = invariant
    factors of ``d_(n+1)`` above 1. With ``prepass`` the ranks are first
    predicted modulo a few large primes and compared with the exact run.
    """
    check_complex(boundary_out, boundary_in)
    predictions = None
    if prepass:
        predictions = (predicted_ranks(boundary_out), predicted_ranks(boundary_in))

    out_snf = smith_normal_form(boundary_out, strategy=strategy)
    in_snf = smith_normal_form(boundary_in, strategy=strategy)

    if predictions is not None:
        checks = (("d_n", predictions[0], out_snf.rank), ("d_(n+1)", predictions[1], in_snf.rank))
        for label, predicted, exact in checks:
            _compare_ranks(label, predicted, exact)

    free_rank = boundary_out.cols - out_snf.rank - in_snf.rank
    return HomologyGroup(free_rank=free_rank, torsion=in_snf.torsion)


def _compare_ranks(label: str, predicted: tuple[int, ...], exact: int) -> None:
    # Rank mod p never exceeds the rational rank.
    if any(r > exact for r in predicted):
        raise RankMismatchError(
            f"modular ranks {list(predicted)} of {label} exceed the exact rank {exact}",
            matrix=label,
            predicted=predicted,
            exact=exact,
        )
    if any(r < exact for r in predicted):
        logger.warning(
            "modular ranks %s of %s fall below the exact rank %d; a pre-pass prime divides every maximal minor",
            list(predicted),
            label,
            exact,
        )


def homology_mod(
    boundary_out: SparseIntMatrix,
    boundary_in: SparseIntMatrix,
    m: int,
) -> ModularHomology:
    """
    ``H_n(C; Z/m)`` by universal coefficients:
    ``(Z/m)^free + sum_{t in tors H_n} Z/gcd(t, m) + sum_{d in inv(d_n)} Z/gcd(d, m)``.
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    check_complex(boundary_out, boundary_in)
    out_snf = smith_normal_form(boundary_out)
    in_snf = smith_normal_form(boundary_in)
    free_rank = boundary_out.cols - out_snf.rank - in_snf.rank

    factors = [m] * free_rank
    factors.extend(math.gcd(t, m) for t in in_snf.torsion)
    factors.extend(math.gcd(d, m) for d in out_snf.d)
    return ModularHomology(modulus=m, factors=tuple(sorted(f for f in factors if f > 1)))


def annihilation_exponent(h: HomologyGroup) -> int | Literal["free"]:
    """Exponent of the torsion subgroup, or ``"free"`` when there is none."""
    return h.torsion[-1] if h.torsion else FREE
