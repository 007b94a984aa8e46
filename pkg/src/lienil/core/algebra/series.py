from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from lienil.core.algebra.base import LieAlgebra, is_ideal, is_subalgebra
from lienil.core.errors import InputError
from lienil.core.linalg.matrix import Matrix, kernel_basis, unit_vector
from lienil.core.linalg.scalar import ZERO
from lienil.core.linalg.subspace import Subspace, intersect, span
from lienil.core.utils.misc import NOT_NILPOTENT


def derived_subalgebra(l: LieAlgebra) -> Subspace:
    """The span of every bracket ``[e_i, e_j]``."""
    return span((l.bracket_basis(i, j) for i, j in l.brackets), l.dim)


def centralizer(l: LieAlgebra, s: Subspace) -> Subspace:
    """The elements ``x`` with ``[x, v] = 0`` for every ``v`` in ``s``."""
    if s.ambient_dim != l.dim:
        msg = f"Subspace of a {s.ambient_dim}-dimensional space used in dimension {l.dim}"
        raise InputError(msg)
    if not s.dim or l.is_abelian():
        return Subspace.full(l.dim)
    # column x, rows (v, k): the k-th coordinate of [e_x, v]
    columns = [
        [l.bracket(unit_vector(l.dim, x), v) for v in s.vectors] for x in range(l.dim)
    ]
    rows = tuple(
        tuple(columns[x][a][k] for x in range(l.dim))
        for a in range(s.dim)
        for k in range(l.dim)
    )
    system = Matrix(rows=len(rows), cols=l.dim, entries=rows)
    return span(kernel_basis(system).entries, l.dim)


def center(l: LieAlgebra) -> Subspace:
    return centralizer(l, Subspace.full(l.dim))


def lower_central_series(l: LieAlgebra) -> list[Subspace]:
    """The terms ``γ_1 = l ⊇ γ_2 = [l, l] ⊇ ...``.

    The list ends with the zero subspace for a nilpotent algebra. Otherwise it ends with
    the first term that repeats, which is nonzero.
    """
    terms = [Subspace.full(l.dim)]
    while terms[-1].dim:
        current = terms[-1]
        following = span(
            (l.bracket(v, unit_vector(l.dim, e)) for v in current.vectors for e in range(l.dim)),
            l.dim,
        )
        if following == current:
            break
        terms.append(following)
    return terms


def upper_central_series(l: LieAlgebra) -> list[Subspace]:
    """The terms ``Z_0 = 0 ⊆ Z_1 = Z(l) ⊆ ...`` with ``Z_{i+1}/Z_i = Z(l/Z_i)``.

    The list ends with ``l`` for a nilpotent algebra, or with the first repeated term.
    """
    terms = [Subspace.zero(l.dim)]
    while not terms[-1].is_full():
        following = _center_modulo(l, terms[-1])
        if following == terms[-1]:
            break
        terms.append(following)
    return terms


def nilpotency_class(l: LieAlgebra) -> Any:
    """The class ``c`` with ``γ_{c+1} = 0``, or `NOT_NILPOTENT`.

    The zero algebra has class 0 and a nonzero abelian algebra has class 1.
    """
    lcs = lower_central_series(l)
    if lcs[-1].dim:
        return NOT_NILPOTENT
    return len(lcs) - 1


def is_nilpotent(l: LieAlgebra) -> bool:
    return nilpotency_class(l) is not NOT_NILPOTENT


@dataclass(frozen=True)
class SemidirectReport:
    """How a pair of subspaces decomposes an algebra as ``l = a ⋊ b``."""

    is_ideal_a: bool
    spans: bool
    trivial_intersection: bool
    is_central_a: bool
    is_subalgebra_b: bool

    @property
    def is_semidirect(self) -> bool:
        return (
            self.is_ideal_a and self.spans and self.trivial_intersection and self.is_subalgebra_b
        )

    @property
    def is_central_extension(self) -> bool:
        """Whether ``a`` is a central ideal complemented (as a vector space) by ``b``."""
        return self.is_central_a and self.spans and self.trivial_intersection


def is_semidirect(l: LieAlgebra, a: Subspace, b: Subspace) -> SemidirectReport:
    return SemidirectReport(
        is_ideal_a=is_ideal(l, a),
        spans=(a + b).is_full(),
        trivial_intersection=not intersect(a, b).dim,
        is_central_a=center(l).contains_subspace(a),
        is_subalgebra_b=is_subalgebra(l, b),
    )


def _center_modulo(l: LieAlgebra, z: Subspace) -> Subspace:
    # x with f·[x, e_j] = 0 for every j and every f annihilating z
    forms = z.annihilator().vectors
    rows = tuple(
        tuple(
            sum((f[k] * c for k, c in enumerate(l.bracket_basis(x, j)) if c), ZERO)
            for x in range(l.dim)
        )
        for j in range(l.dim)
        for f in forms
    )
    if not rows:
        return Subspace.full(l.dim)
    system = Matrix(rows=len(rows), cols=l.dim, entries=rows)
    return span(kernel_basis(system).entries, l.dim)
