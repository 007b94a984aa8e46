from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Mapping, Sequence, Union

from lienil.core.algebra.base import BracketSpec, LieAlgebra, from_brackets
from lienil.core.algebra.fingerprint import Fingerprint, matches_fingerprint
from lienil.core.cohomology.complex import ce_differential
from lienil.core.config import get_settings
from lienil.core.errors import InputError, NotACocycle, NotAntisymmetric
from lienil.core.linalg.matrix import Matrix, Vector, kernel_basis
from lienil.core.linalg.scalar import ZERO, Scalar, ScalarLike
from lienil.core.utils.misc import subsets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwoCocycle:
    """An antisymmetric form ``θ(e_i, e_j) = theta[i][j]`` (0-based)."""

    theta: Matrix

    def __post_init__(self) -> None:
        if self.theta.rows != self.theta.cols:
            msg = f"A bilinear form needs a square matrix, not {self.theta.shape}"
            raise NotAntisymmetric(msg)
        n = self.theta.rows
        for i in range(n):
            for j in range(i, n):
                if self.theta.entries[i][j] != -self.theta.entries[j][i]:
                    msg = f"Form is not antisymmetric at ({i + 1},{j + 1})"
                    raise NotAntisymmetric(msg)

    @classmethod
    def from_pairs(cls, n: int, values: Mapping[tuple[int, int], ScalarLike]) -> TwoCocycle:
        """Build a form from ``{(i, j): θ(e_i, e_j)}`` with 1-based indices."""
        rows = [[ZERO] * n for _ in range(n)]
        for (i, j), value in values.items():
            if not (1 <= i <= n and 1 <= j <= n):
                msg = f"Pair ({i},{j}) is outside 1..{n}"
                raise InputError(msg)
            if i == j:
                if value:
                    msg = f"θ(e{i}, e{i}) must be zero"
                    raise NotAntisymmetric(msg)
                continue
            x = Scalar.of(value)
            rows[i - 1][j - 1] = x
            rows[j - 1][i - 1] = -x
        return cls(Matrix.from_rows(rows, cols=n))

    @classmethod
    def from_vector(cls, n: int, v: Sequence[Scalar]) -> TwoCocycle:
        """Build a form from its coordinates in the lexicographic pair basis ``φ_ij``."""
        return cls.from_pairs(n, {(i + 1, j + 1): x for (i, j), x in zip(subsets(n, 2), v)})

    @property
    def dim(self) -> int:
        return self.theta.rows

    def value(self, i: int, j: int) -> Scalar:
        return self.theta.entries[i][j]

    def evaluate(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
        return sum(
            (
                x[i] * y[j] * v
                for i, row in enumerate(self.theta.sparse_rows)
                if x[i]
                for j, v in row.items()
            ),
            ZERO,
        )

    def to_vector(self) -> Vector:
        return tuple(self.value(i, j) for i, j in subsets(self.dim, 2))

    def pairs(self) -> dict[tuple[int, int], Scalar]:
        """The nonzero values ``θ(e_i, e_j)`` with 1-based ``i < j``."""
        return {(i + 1, j + 1): x for (i, j), x in zip(subsets(self.dim, 2), self.to_vector()) if x}

    def __str__(self) -> str:
        return ", ".join(f"({i},{j})={x}" for (i, j), x in self.pairs().items()) or "0"


FormLike = Union[TwoCocycle, Matrix]


def cocycle_space(l: LieAlgebra) -> list[TwoCocycle]:
    """A basis of the 2-cocycles, one per free column of ``d²``."""
    if l.dim < 2:
        return []
    basis = kernel_basis(ce_differential(l, 2).matrix)
    return [TwoCocycle.from_vector(l.dim, v) for v in basis.entries]


def is_cocycle(l: LieAlgebra, theta: FormLike) -> bool:
    """Whether ``θ([x,y],z) + θ([y,z],x) + θ([z,x],y)`` vanishes on every basis triple."""
    form = _as_cocycle(theta)
    if form.dim != l.dim:
        msg = f"Form of dimension {form.dim} given for an algebra of dimension {l.dim}"
        raise InputError(msg)
    for i, j, k in subsets(l.dim, 3):
        total = ZERO
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            bracket = l.bracket_basis(a, b)
            total += sum((x * form.value(m, c) for m, x in enumerate(bracket) if x), ZERO)
        if total:
            return False
    return True


def central_extension(l: LieAlgebra, theta: FormLike) -> LieAlgebra:
    """The algebra ``l ⊕ ⟨z⟩`` with ``[x, y] = [x, y]_l + θ(x, y) z`` and ``z`` central."""
    form = _as_cocycle(theta)
    if not is_cocycle(l, form):
        msg = f"Form {form} is not a 2-cocycle"
        raise NotACocycle(msg)
    n = l.dim + 1
    brackets: list[BracketSpec] = []
    for i, j in subsets(l.dim, 2):
        value = {k + 1: x for k, x in enumerate(l.bracket_basis(i, j)) if x}
        if form.value(i, j):
            value[n] = form.value(i, j)
        if value:
            brackets.append((i + 1, j + 1, value))
    return from_brackets(n, brackets)


def find_extension_to(
    l: LieAlgebra,
    target: Fingerprint,
    coeff_bound: int | None = None,
) -> TwoCocycle | None:
    """Search integer combinations of the cocycle basis for an extension with ``target``.

    Candidates are tried by support size, then by coefficients ``1, -1, 2, -2, ...``, so
    the simplest witness is found first. Returns ``None`` when no combination within the
    bound works.
    """
    bound = get_settings().search_bound if coeff_bound is None else coeff_bound
    if bound < 1:
        msg = f"Coefficient bound must be at least 1, not {bound}"
        raise InputError(msg)
    if target.dim != l.dim + 1:
        return None
    basis = cocycle_space(l)
    tried = 0
    for form in _candidates(l.dim, basis, bound):
        tried += 1
        if matches_fingerprint(central_extension(l, form), target):
            logger.debug("Found extension %s after %d candidates", form, tried)
            return form
    logger.debug("No extension found among %d candidates", tried)
    return None


def _candidates(n: int, basis: Sequence[TwoCocycle], bound: int) -> Iterator[TwoCocycle]:
    coefficients = [c for k in range(1, bound + 1) for c in (k, -k)]
    vectors = [b.to_vector() for b in basis]
    yield TwoCocycle.from_pairs(n, {})
    for size in range(1, len(basis) + 1):
        for support in combinations(range(len(basis)), size):
            for coeffs in product(coefficients, repeat=size):
                combined = [ZERO] * len(vectors[0])
                for index, c in zip(support, coeffs):
                    for m, x in enumerate(vectors[index]):
                        if x:
                            combined[m] = combined[m] + c * x
                yield TwoCocycle.from_vector(n, combined)


def _as_cocycle(theta: FormLike) -> TwoCocycle:
    return theta if isinstance(theta, TwoCocycle) else TwoCocycle(theta)
