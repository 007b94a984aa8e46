"""The Chevalley-Eilenberg complex of a Lie algebra with trivial coefficients.

A ``p``-cochain is written in the basis ``φ_S`` of ``p``-subsets ``S`` of the basis,
listed in lexicographic order, where ``φ_S(e_S) = 1`` and ``φ_S`` vanishes on every other
sorted basis tuple. The differential is

    (dφ)(x_0, ..., x_p) = Σ_{i<j} (-1)^(i+j) φ([x_i, x_j], x_0, ..., x̂_i, ..., x̂_j, ..., x_p)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

from lienil.core.algebra.base import LieAlgebra
from lienil.core.algebra.series import derived_subalgebra, is_nilpotent
from lienil.core.config import get_settings
from lienil.core.errors import InputError
from lienil.core.linalg.matrix import Matrix, SparseRow, rank
from lienil.core.linalg.scalar import ZERO
from lienil.core.utils.misc import insertion_sign, subsets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CochainMatrix:
    """The matrix of ``d^p : C^p → C^(p+1)``, one row per ``(p+1)``-subset."""

    degree: int
    matrix: Matrix

    @property
    def rank(self) -> int:
        return rank(self.matrix)


@dataclass(frozen=True)
class CohomologyReport:
    """Ranks of the low differentials and what follows from them."""

    n: int
    rank_d1: int
    rank_d2: int

    @property
    def cocycle_dim(self) -> int:
        """``dim Z²``, the number of independent 2-cocycles."""
        return comb(self.n, 2) - self.rank_d2

    @property
    def multiplier_dim(self) -> int:
        return self.cocycle_dim - self.rank_d1

    @property
    def corank(self) -> int:
        return comb(self.n, 2) - self.multiplier_dim

    def to_dict(self) -> dict[str, int]:
        return {
            "n": self.n,
            "rank_d1": self.rank_d1,
            "rank_d2": self.rank_d2,
            "multiplier_dim": self.multiplier_dim,
            "corank": self.corank,
        }


def ce_differential(l: LieAlgebra, p: int) -> CochainMatrix:
    if not 0 <= p <= l.dim:
        msg = f"Cochain degree {p} is outside 0..{l.dim}"
        raise InputError(msg)
    columns = {s: index for index, s in enumerate(subsets(l.dim, p))}
    rows: list[SparseRow] = []
    for t in subsets(l.dim, p + 1):
        row: SparseRow = {}
        for a in range(len(t)):
            for b in range(a + 1, len(t)):
                bracket = l.brackets.get((t[a], t[b]))
                if bracket is None:
                    continue
                rest = t[:a] + t[a + 1 : b] + t[b + 1 :]
                sign = -1 if (a + b) % 2 else 1
                for k, c in bracket.items():
                    if k in rest:
                        continue
                    column = columns[tuple(sorted((k, *rest)))]
                    value = row.get(column, ZERO) + c * (sign * insertion_sign(k, rest))
                    if value:
                        row[column] = value
                    else:
                        row.pop(column, None)
        rows.append(row)
    return CochainMatrix(degree=p, matrix=Matrix.from_sparse(rows, len(columns)))


def is_square_zero(l: LieAlgebra, p: int) -> bool:
    """Whether ``d^(p+1) ∘ d^p`` vanishes."""
    return (ce_differential(l, p + 1).matrix @ ce_differential(l, p).matrix).is_zero()


def cohomology_report(l: LieAlgebra) -> CohomologyReport:
    """Compute the ranks behind the Schur multiplier of ``l``.

    ``rank d¹`` is read off as ``dim [l, l]`` since ``(dφ)(e_i, e_j) = -φ([e_i, e_j])``.
    """
    if not is_nilpotent(l):
        msg = f"Cohomology requested for {l.label or 'an algebra'} which is not nilpotent"
        if get_settings().strict_nilpotent:
            raise InputError(msg)
        logger.warning(msg)
    if l.dim < 2:
        return CohomologyReport(n=l.dim, rank_d1=0, rank_d2=0)
    rank_d2 = 0 if l.is_abelian() else ce_differential(l, 2).rank
    return CohomologyReport(n=l.dim, rank_d1=derived_subalgebra(l).dim, rank_d2=rank_d2)


def schur_multiplier_dim(l: LieAlgebra) -> int:
    return cohomology_report(l).multiplier_dim


def corank(l: LieAlgebra) -> int:
    """``n(n-1)/2 - dim M(l)``, zero exactly for abelian algebras."""
    return cohomology_report(l).corank
