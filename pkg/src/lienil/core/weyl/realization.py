from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Literal, Sequence

from typing_extensions import TypeAlias

from lienil.core.algebra.base import LieAlgebra
from lienil.core.catalog.entries import get
from lienil.core.catalog.generators import heisenberg, heisenberg_plus_abelian
from lienil.core.errors import InputError, ModeMismatch, UnknownName
from lienil.core.linalg.matrix import Matrix, rank
from lienil.core.linalg.scalar import ONE, I, Scalar, ScalarLike
from lienil.core.utils.misc import normalize_name
from lienil.core.weyl.element import (
    WeylElement,
    adjoint,
    commutator,
    generators,
    linear_combination,
)

logger = logging.getLogger(__name__)

Kind: TypeAlias = Literal["pseudo", "bosonic"]
KINDS: tuple[Kind, ...] = ("pseudo", "bosonic")

REALIZATION_NAMES: tuple[str, ...] = (
    "L4_3-bosonic",
    "L4_3-pseudo",
    "L5_8-bosonic",
    "L5_8-pseudo",
    "L5_5-bosonic",
    "L5_5-pseudo",
    "L5_8+A(1)-pseudo",
    "H(m)-shifted",
    "H(m)+A(k)",
)
"""The built-in realizations, with ``m`` and ``k`` standing for counts"""

_LADDER_PATTERN = re.compile(r"^(L4_3|L5_8|L5_5|L5_8\+A\(1\))-(BOSONIC|PSEUDO)$")
_SHIFTED_PATTERN = re.compile(r"^H\((\d+)\)-SHIFTED$")
_SUM_PATTERN = re.compile(r"^H\((\d+)\)(?:\+A\((\d+)\))?$")


@dataclass(frozen=True)
class Realization:
    """An assignment of Weyl algebra elements to the basis of a Lie algebra.

    ``kind`` says whether the ladder pairs are read as bosons (``b = a†``) or as
    pseudo-bosons. Commutators do not depend on it, formal adjoints do.
    """

    name: str
    algebra: LieAlgebra
    assignment: tuple[WeylElement, ...]
    modes: int
    kind: Kind = "pseudo"

    def __post_init__(self) -> None:
        if len(self.assignment) != self.algebra.dim:
            msg = f"Realization {self.name!r} assigns {len(self.assignment)} operators "
            msg += f"to an algebra of dimension {self.algebra.dim}"
            raise InputError(msg)
        for index, x in enumerate(self.assignment, 1):
            if x.modes != self.modes:
                msg = f"v{index} of {self.name!r} acts on {x.modes} modes, not {self.modes}"
                raise ModeMismatch(msg)
        if self.kind not in KINDS:
            msg = f"Realization kind must be one of {KINDS}, not {self.kind!r}"
            raise InputError(msg)

    def image(self, v: Sequence[ScalarLike]) -> WeylElement:
        """The operator assigned to a vector of the algebra."""
        return linear_combination(v, self.assignment, self.modes)

    def verify(self) -> RealizationReport:
        return verify_realization(self.algebra, self.assignment)

    def adjoint(self, x: WeylElement) -> WeylElement:
        """The formal adjoint of an operator built on this realization's modes."""
        if self.kind == "pseudo":
            logger.warning(
                "Formal adjoint taken on pseudo-bosonic realization %r where b is not a's adjoint",
                self.name,
            )
        return adjoint(x)


@dataclass(frozen=True)
class Mismatch:
    """A basis pair whose operator commutator differs from the image of its bracket."""

    i: int
    j: int
    difference: WeylElement
    """``[X_i, X_j] - Σ_k c_ij^k X_k``"""

    def __str__(self) -> str:
        return f"[v{self.i},v{self.j}]: difference {self.difference}"


@dataclass(frozen=True)
class RealizationReport:
    mismatches: tuple[Mismatch, ...]
    is_faithful: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def is_homomorphism(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict[str, object]:
        return {
            "is_homomorphism": self.is_homomorphism,
            "is_faithful": self.is_faithful,
            "mismatches": [str(m) for m in self.mismatches],
            "notes": list(self.notes),
        }


def verify_realization(l: LieAlgebra, assignment: Sequence[WeylElement]) -> RealizationReport:
    """Check that ``v_i ↦ X_i`` respects every bracket, and whether it is injective."""
    if len(assignment) != l.dim:
        msg = f"Expected {l.dim} operators, got {len(assignment)}"
        raise InputError(msg)
    if not assignment:
        return RealizationReport(mismatches=(), is_faithful=True)
    modes = assignment[0].modes
    if any(x.modes != modes for x in assignment):
        msg = "Every operator of a realization must act on the same modes"
        raise ModeMismatch(msg)
    mismatches = []
    for i in range(l.dim):
        for j in range(i + 1, l.dim):
            expected = linear_combination(l.bracket_basis(i, j), assignment, modes)
            difference = commutator(assignment[i], assignment[j]) - expected
            if difference:
                mismatches.append(Mismatch(i=i + 1, j=j + 1, difference=difference))
    faithful = _linearly_independent(assignment)
    notes = [] if faithful else ["the assigned operators are linearly dependent"]
    return RealizationReport(
        mismatches=tuple(mismatches), is_faithful=faithful, notes=tuple(notes)
    )


def named_realization(
    name: str,
    alpha: ScalarLike | Sequence[ScalarLike] = I,
    beta: ScalarLike | Sequence[ScalarLike] = ONE,
) -> Realization:
    """A built-in realization by name (see `REALIZATION_NAMES`).

    ``alpha`` and ``beta`` give the shifts of ``H(m)-shifted``, one value per mode or a
    single value for every mode. Other names ignore them.
    """
    key = normalize_name(name)
    if match := _LADDER_PATTERN.match(key):
        target, kind = match.group(1), match.group(2).lower()
        return _ladder_realization(target, kind)  # type: ignore[arg-type]
    if match := _SHIFTED_PATTERN.match(key):
        return _shifted_realization(int(match.group(1)), alpha, beta)
    if match := _SUM_PATTERN.match(key):
        m, k = int(match.group(1)), int(match.group(2) or 0)
        if m >= 1:
            return _sum_realization(m, k)
    msg = f"No built-in realization named {name!r}"
    raise UnknownName(msg)


def _ladder_realization(target: str, kind: Kind) -> Realization:
    if target == "L4_3":
        (a,), (b,), one = generators(1)
        assignment = (a, b**2 / 2, b, one)
        modes = 1
    elif target == "L5_8":
        (a1, a2), (b1, _), one = generators(2)
        assignment = (a1, b1, b1 * a2, one, a2)
        modes = 2
    elif target == "L5_5":
        (a1, a2), (b1, b2), one = generators(2)
        assignment = (a1, a2 + b1**2 / 2, b1, b2, one)
        modes = 2
    else:
        # L5_8 plus one operator commuting with all of its images
        (a1, a2, _), (b1, _, b3), one = generators(3)
        assignment = (a1, b1, b1 * a2, one, a2, b3)
        modes = 3
    return Realization(
        name=f"{target}-{kind}",
        algebra=get(target).algebra,
        assignment=assignment,
        modes=modes,
        kind=kind,
    )


def _shifted_realization(
    m: int,
    alpha: ScalarLike | Sequence[ScalarLike],
    beta: ScalarLike | Sequence[ScalarLike],
) -> Realization:
    algebra = heisenberg(m)
    alphas, betas = _per_mode(alpha, m, "alpha"), _per_mode(beta, m, "beta")
    lowers, raises, one = generators(m)
    assignment: list[WeylElement] = []
    for j in range(m):
        if alphas[j] == betas[j].conjugate():
            logger.warning(
                "Shifts alpha=%s and beta=%s of mode %d are conjugate, so the shifted "
                "pair is an ordinary bosonic pair",
                alphas[j],
                betas[j],
                j + 1,
            )
        assignment.extend([lowers[j] + one * alphas[j], raises[j] + one * betas[j]])
    assignment.append(one)
    return Realization(
        name=f"H({m})-shifted",
        algebra=algebra,
        assignment=tuple(assignment),
        modes=m,
        kind="pseudo",
    )


def _sum_realization(m: int, k: int) -> Realization:
    lowers, raises, one = generators(m)
    assignment: list[WeylElement] = []
    for j in range(m):
        assignment.extend([lowers[j], raises[j]])
    # the central element and every abelian generator go to the identity
    assignment.extend([one] * (k + 1))
    return Realization(
        name=f"H({m})+A({k})" if k else f"H({m})",
        algebra=heisenberg_plus_abelian(m, k),
        assignment=tuple(assignment),
        modes=m,
        kind="bosonic",
    )


def _per_mode(value: ScalarLike | Sequence[ScalarLike], m: int, label: str) -> list[Scalar]:
    if not isinstance(value, Sequence):
        return [Scalar.of(value)] * m
    if len(value) != m:
        msg = f"Expected {m} values of {label}, got {len(value)}"
        raise InputError(msg)
    return [Scalar.of(v) for v in value]


def _linearly_independent(elements: Sequence[WeylElement]) -> bool:
    monomials = sorted({m for x in elements for m, _ in x.terms})
    if len(monomials) < len(elements):
        return False
    rows = [[x.coefficient(*m) for m in monomials] for x in elements]
    return rank(Matrix.from_rows(rows, cols=len(monomials))) == len(elements)
