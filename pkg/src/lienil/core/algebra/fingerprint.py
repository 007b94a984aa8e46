from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Sequence

from lienil.core.algebra.base import LieAlgebra
from lienil.core.algebra.series import (
    centralizer,
    lower_central_series,
    nilpotency_class,
    upper_central_series,
)
from lienil.core.cohomology.complex import cohomology_report
from lienil.core.linalg.subspace import Subspace
from lienil.core.utils.batch import ComputeBatch, anysync
from lienil.core.utils.misc import NOT_NILPOTENT

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism invariants used to tell algebras apart.

    Equal fingerprints are necessary for isomorphism, not sufficient in general. They are
    sufficient within the built-in catalog.
    """

    dim: int
    lcs_dims: tuple[int, ...]
    ucs_dims: tuple[int, ...]
    nilpotency_class: Any
    multiplier_dim: int
    corank: int
    centralizer_dims: tuple[int, ...]
    """Dimensions of the centralizers of the lower central series terms"""

    def to_dict(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "lcs_dims": list(self.lcs_dims),
            "ucs_dims": list(self.ucs_dims),
            "class": (
                str(self.nilpotency_class)
                if self.nilpotency_class is NOT_NILPOTENT
                else self.nilpotency_class
            ),
            "multiplier_dim": self.multiplier_dim,
            "corank": self.corank,
            "centralizer_dims": list(self.centralizer_dims),
        }

    def __str__(self) -> str:
        return (
            f"dim {self.dim}, LCS {list(self.lcs_dims)}, UCS {list(self.ucs_dims)}, "
            f"class {self.nilpotency_class}, dim M {self.multiplier_dim}, t {self.corank}, "
            f"centralizers {list(self.centralizer_dims)}"
        )


def fingerprint(l: LieAlgebra) -> Fingerprint:
    lcs = lower_central_series(l)
    report = cohomology_report(l)
    return Fingerprint(
        dim=l.dim,
        lcs_dims=_dims(lcs),
        ucs_dims=_dims(upper_central_series(l)),
        nilpotency_class=nilpotency_class(l),
        multiplier_dim=report.multiplier_dim,
        corank=report.corank,
        centralizer_dims=tuple(centralizer(l, term).dim for term in lcs),
    )


def matches_fingerprint(l: LieAlgebra, target: Fingerprint) -> bool:
    """Compare ``fingerprint(l)`` with ``target``, computing the cheap invariants first."""
    if l.dim != target.dim:
        return False
    lcs = lower_central_series(l)
    if _dims(lcs) != target.lcs_dims:
        return False
    if _dims(upper_central_series(l)) != target.ucs_dims:
        return False
    if tuple(centralizer(l, term).dim for term in lcs) != target.centralizer_dims:
        return False
    return fingerprint(l) == target


@anysync
async def fingerprint_many(algebras: Sequence[LieAlgebra]) -> list[Fingerprint]:
    """Fingerprint several algebras in worker threads, keeping their order."""
    logger.debug("Fingerprinting %d algebras", len(algebras))
    return list(await ComputeBatch[Fingerprint]().map(fingerprint, algebras).gather())


def _dims(terms: Sequence[Subspace]) -> tuple[int, ...]:
    return tuple(t.dim for t in terms)
