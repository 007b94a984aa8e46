from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from lienil.core.errors import InputError
from lienil.core.linalg.matrix import Matrix, Vector, kernel_basis, rref, vector
from lienil.core.linalg.scalar import ZERO, Scalar, ScalarLike


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q(i)^n`` stored by its canonical RREF basis.

    Two subspaces are equal exactly when their RREF bases are identical, so the generated
    dataclass equality is subspace equality.
    """

    ambient_dim: int
    basis: Matrix

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim=ambient_dim, basis=Matrix.zeros(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim=ambient_dim, basis=Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> tuple[Vector, ...]:
        return self.basis.entries

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(row) if x) for row in self.basis.entries]

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        """Subtract the basis combination that clears ``v`` on every pivot column."""
        if len(v) != self.ambient_dim:
            msg = f"Vector of length {len(v)} is not in an ambient space of dimension "
            msg += str(self.ambient_dim)
            raise InputError(msg)
        out = list(v)
        for row, p in zip(self.basis.sparse_rows, self.pivots):
            factor = out[p]
            if factor:
                for j, x in row.items():
                    out[j] = out[j] - factor * x
        return tuple(out)

    def contains(self, v: Sequence[ScalarLike]) -> bool:
        return not any(self.reduce(vector(v)))

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.vectors)

    def __add__(self, other: Subspace) -> Subspace:
        _check_ambient(self, other)
        return span([*self.vectors, *other.vectors], self.ambient_dim)

    def annihilator(self) -> Subspace:
        """The vectors ``f`` with ``f·v = 0`` for every ``v`` in this subspace."""
        if not self.dim:
            return Subspace.full(self.ambient_dim)
        return span(kernel_basis(self.basis).entries, self.ambient_dim)

    def __str__(self) -> str:
        inner = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vectors)
        return f"span{{{inner}}}"


def span(vectors: Iterable[Sequence[ScalarLike]], ambient_dim: int) -> Subspace:
    """The canonical subspace spanned by some vectors."""
    rows = [vector(v) for v in vectors]
    for v in rows:
        if len(v) != ambient_dim:
            msg = f"Vector of length {len(v)} given for ambient dimension {ambient_dim}"
            raise InputError(msg)
    if not rows:
        return Subspace.zero(ambient_dim)
    reduced, r, _ = rref(Matrix(rows=len(rows), cols=ambient_dim, entries=tuple(rows)))
    return Subspace(
        ambient_dim=ambient_dim,
        basis=Matrix(rows=r, cols=ambient_dim, entries=reduced.entries[:r]),
    )


def intersect(s: Subspace, t: Subspace) -> Subspace:
    """The intersection of two subspaces of the same ambient space.

    Solves ``α·S = β·T`` through the kernel of the stacked system ``[Sᵀ | -Tᵀ]``.
    """
    _check_ambient(s, t)
    if not s.dim or not t.dim:
        return Subspace.zero(s.ambient_dim)
    stacked = Matrix(
        rows=s.ambient_dim,
        cols=s.dim + t.dim,
        entries=tuple(
            tuple(v[x] for v in s.vectors) + tuple(-v[x] for v in t.vectors)
            for x in range(s.ambient_dim)
        ),
    )
    combos = kernel_basis(stacked).entries
    return span(
        (
            tuple(
                sum((c[a] * s.vectors[a][x] for a in range(s.dim)), ZERO)
                for x in range(s.ambient_dim)
            )
            for c in combos
        ),
        s.ambient_dim,
    )


def _check_ambient(s: Subspace, t: Subspace) -> None:
    if s.ambient_dim != t.ambient_dim:
        msg = f"Ambient dimensions differ: {s.ambient_dim} and {t.ambient_dim}"
        raise InputError(msg)
